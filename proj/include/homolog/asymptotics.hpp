#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homolog/errors.hpp"

namespace homolog {

// Finite prefix of a non-negative integer sequence with provenance.
struct InvariantSequence {
    std::vector<long long> values;
    std::string label;

    InvariantSequence() = default;
    InvariantSequence(std::vector<long long> v, std::string lab = "")
        : values(std::move(v)), label(std::move(lab)) {}
    size_t size() const { return values.size(); }
};

// Complexity verdicts. `exact` carries the polynomial-growth order b;
// `at_least` is an estimator lower bound; `infinite` certified through a
// recurrence with dominant root > 1.
struct CxValue {
    enum Kind { Exact, AtLeast, Infinite, Inconclusive } kind = Inconclusive;
    long long b = 0;

    static CxValue exact(long long v) { return {Exact, v}; }
    static CxValue at_least(long long v) { return {AtLeast, v}; }
    static CxValue infinite() { return {Infinite, 0}; }
    static CxValue inconclusive() { return {Inconclusive, 0}; }
    bool is_exact() const { return kind == Exact || kind == Infinite; }
    std::string to_string() const;
};

// Curvature verdicts. Exact values are rationals certified as the dominant
// root of a verified recurrence; estimates carry the trailing-window size.
struct CurvValue {
    enum Kind { Exact, Estimate } kind = Estimate;
    mpq_class rho;       // exact value
    double est = 0.0;    // estimate value
    int window = 0;

    static CurvValue exact(mpq_class v) {
        CurvValue c;
        c.kind = Exact;
        c.rho = std::move(v);
        return c;
    }
    static CurvValue estimate(double v, int w) {
        CurvValue c;
        c.kind = Estimate;
        c.est = v;
        c.window = w;
        return c;
    }
    bool is_exact() const { return kind == Exact; }
    std::string to_string() const;
};

struct AsymptoticsReport {
    CxValue cx;
    CurvValue curv;
    std::optional<std::vector<mpq_class>> recurrence; // a_t = sum c_j a_{t-1-j}
    std::string diagnostics;
};

// Shortest linear recurrence with rational coefficients of order at most
// len/2 - 1 fitting every entry, or nullopt. Requires length >= 6.
std::optional<std::vector<mpq_class>> detect_recurrence(const InvariantSequence& s);

// Classify growth. Throws TooShortError below 4 entries.
AsymptoticsReport analyze(const InvariantSequence& s);

// The limsup estimator on its own: max of a_n^(1/n) over the trailing
// ceil(len/3) window. analyze() falls back to this when no recurrence is
// certified.
CurvValue curv_window_estimate(const InvariantSequence& s);

// Extended-value comparisons used by the check catalog. Indeterminate
// (nullopt) when either side lacks an exact report.
std::optional<bool> cx_le(const CxValue& a, const CxValue& b);
std::optional<bool> cx_eq(const CxValue& a, const CxValue& b);
std::optional<bool> cx_le_plus_one(const CxValue& a, const CxValue& b); // a <= 1 + b
std::optional<bool> curv_le(const CurvValue& a, const CurvValue& b);
std::optional<bool> curv_eq(const CurvValue& a, const CurvValue& b);
// a <= sup{q, b} for a rational constant q
std::optional<bool> curv_le_sup(const CurvValue& a, const mpq_class& q, const CurvValue& b);
// curv <= 1 test (for complete-intersection style conclusions)
std::optional<bool> curv_le_one(const CurvValue& a);

// Sequence-calculus lemma checks. The inputs carry the sequences and
// constants a given lemma names; hypotheses are verified on the prefix and
// the conclusion is asserted at the level of exact reports.
struct LemmaCheckResult {
    enum Status { Pass, Fail, HypothesisFailed, Inconclusive } status = Inconclusive;
    long long counterexample = -1; // index for Fail/HypothesisFailed
    std::string detail;
};

struct LemmaInputs {
    InvariantSequence x, y;      // primary / secondary sequences
    mpq_class a = 1, b = 0, w = 1; // constants, per lemma
    std::vector<long long> poly; // Laurent lemma: coefficients of P
};

// lemma_id: "domination", "recursion-bound", "shift-sum", "sum", "laurent"
LemmaCheckResult check_sequence_lemma(const std::string& lemma_id, const LemmaInputs& in);

} // namespace homolog
