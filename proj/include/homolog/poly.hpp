#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homolog/errors.hpp"
#include "homolog/field.hpp"

namespace homolog {

// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<uint32_t> e;

    explicit Monomial(int nvars = 0) : e(nvars, 0) {}
    int nvars() const { return (int)e.size(); }
    uint64_t degree() const {
        uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const { return degree() == 0; }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
    return m;
}

inline bool mon_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a, assuming a | b.
inline Monomial mon_div(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] -= a.e[i];
    return m;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
}

inline bool mon_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// Degree-lexicographic order: total degree first, lex tie-break. Within a
// degree the first declared variable sorts earliest, so staircases list as
// 1, x1, x2, ..., x1^2, x1 x2, ...
inline bool deglex_less(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

inline std::string mon_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

// Polynomial over F: terms strictly decreasing in deg-lex, no zero
// coefficients, empty term list is the zero polynomial.
template <class F>
struct Poly {
    using Elem = typename F::Elem;
    struct Term {
        Monomial m;
        Elem c;
    };
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const Elem& lc() const { return terms.front().c; }
};

template <class F>
Poly<F> poly_zero() { return Poly<F>{}; }

template <class F>
Poly<F> poly_term(const F& f, Monomial m, typename F::Elem c) {
    Poly<F> p;
    if (!f.is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
    return p;
}

// Merge-add, keeping the representation invariant.
template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        const auto& ta = a.terms[i];
        const auto& tb = b.terms[j];
        if (ta.m == tb.m) {
            auto c = f.add(ta.c, tb.c);
            if (!f.is_zero(c)) r.terms.push_back({ta.m, c});
            ++i, ++j;
        } else if (deglex_less(tb.m, ta.m)) {
            r.terms.push_back(ta);
            ++i;
        } else {
            r.terms.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
    Poly<F> r;
    if (f.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m, f.mul(t.c, c)});
    return r;
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
    Poly<F> r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m, f.neg(t.c)});
    return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(f, a, poly_neg(f, b));
}

// a * (c * m)
template <class F>
Poly<F> poly_mul_term(const F& f, const Poly<F>& a, const Monomial& m,
                      const typename F::Elem& c) {
    Poly<F> r;
    if (f.is_zero(c)) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({mon_mul(t.m, m), f.mul(t.c, c)});
    return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    for (const auto& t : b.terms) r = poly_add(f, r, poly_mul_term(f, a, t.m, t.c));
    return r;
}

template <class F>
std::string poly_to_string(const F& f, const Poly<F>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.terms.size(); ++i) {
        if (i) s += "+";
        s += f.to_string(p.terms[i].c);
        if (!p.terms[i].m.is_one()) s += "*" + mon_to_string(p.terms[i].m, vars);
    }
    return s;
}

// Parser for the corpus polynomial grammar: terms joined by '+'/'-', a term
// is '*'-joined factors, each an integer or var('^'exponent). Integer
// coefficients are reduced into the field.
template <class F>
Poly<F> parse_poly(const F& f, const std::string& src, const std::vector<std::string>& vars) {
    std::map<std::string, int> var_index;
    for (size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = (int)i;
    const int nv = (int)vars.size();

    size_t pos = 0;
    auto skip_ws = [&] { while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos; };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("polynomial '" + src + "': " + msg + " at offset " + std::to_string(pos));
    };

    auto parse_uint = [&]() -> long long {
        size_t start = pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
        if (pos == start) throw fail("expected integer");
        return std::stoll(src.substr(start, pos - start));
    };
    auto parse_ident = [&]() -> std::string {
        size_t start = pos;
        if (pos < src.size() && (std::isalpha((unsigned char)src[pos]) || src[pos] == '_')) {
            ++pos;
            while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) ++pos;
        }
        if (pos == start) throw fail("expected variable name");
        return src.substr(start, pos - start);
    };

    Poly<F> result;
    skip_ws();
    if (pos == src.size()) throw fail("empty polynomial");
    bool first = true;
    while (pos < src.size()) {
        skip_ws();
        long long sign = 1;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
            sign = (src[pos] == '-') ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        skip_ws();
        // one term: factors joined by '*'
        auto coeff = f.from_int(sign);
        Monomial mon(nv);
        bool term_done = false;
        bool any_factor = false;
        while (!term_done) {
            skip_ws();
            if (pos >= src.size()) {
                if (!any_factor) throw fail("dangling sign");
                break;
            }
            char ch = src[pos];
            if (std::isdigit((unsigned char)ch)) {
                long long v = parse_uint();
                coeff = f.mul(coeff, f.from_int(v));
                any_factor = true;
            } else if (std::isalpha((unsigned char)ch) || ch == '_') {
                std::string name = parse_ident();
                auto it = var_index.find(name);
                if (it == var_index.end()) throw fail("unknown variable '" + name + "'");
                long long exp = 1;
                skip_ws();
                if (pos < src.size() && src[pos] == '^') {
                    ++pos;
                    skip_ws();
                    exp = parse_uint();
                }
                mon.e[it->second] += (uint32_t)exp;
                any_factor = true;
            } else {
                throw fail(std::string("unexpected character '") + ch + "'");
            }
            skip_ws();
            if (pos < src.size() && src[pos] == '*') {
                ++pos;
                continue;
            }
            term_done = true;
        }
        if (!any_factor) throw fail("empty term");
        result = poly_add(f, result, poly_term(f, mon, coeff));
        first = false;
    }
    return result;
}

} // namespace homolog
