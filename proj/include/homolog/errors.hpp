#pragma once

#include <stdexcept>
#include <string>

namespace homolog {

struct HomologError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstantTermError : HomologError {
    using HomologError::HomologError;
};

struct NotMPrimaryError : HomologError {
    using HomologError::HomologError;
};

struct DegreeCapError : HomologError {
    using HomologError::HomologError;
};

struct ZeroModuleError : HomologError {
    using HomologError::HomologError;
};

struct RingMismatchError : HomologError {
    using HomologError::HomologError;
};

struct BudgetExceededError : HomologError {
    using HomologError::HomologError;
};

struct TooShortError : HomologError {
    using HomologError::HomologError;
};

struct UnknownCheckError : HomologError {
    using HomologError::HomologError;
};

// Corpus file syntax error with position info.
struct ParseError : HomologError {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : HomologError(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    explicit ParseError(const std::string& msg) : HomologError(msg) {}
};

} // namespace homolog
