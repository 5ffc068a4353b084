#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "homolog/poly.hpp"

namespace homolog {

// Reduced Groebner basis under deg-lex. Invariants: generators monic,
// pairwise tail-reduced, sorted ascending by leading monomial.
template <class F>
struct GroebnerBasis {
    std::vector<Poly<F>> gens;
    int nvars = 0;
};

// Full reduction of f modulo gb: the remainder is supported on standard
// monomials (no term divisible by a leading monomial of gb).
template <class F>
Poly<F> normal_form(const F& f, Poly<F> p, const GroebnerBasis<F>& gb) {
    Poly<F> rem;
    while (!p.is_zero()) {
        bool reduced = false;
        const Monomial& lm = p.lm();
        for (const auto& g : gb.gens) {
            if (!mon_divides(g.lm(), lm)) continue;
            // p -= (lc(p)/lc(g)) * (lm/lm(g)) * g   (generators are monic)
            auto q = poly_mul_term(f, g, mon_div(lm, g.lm()), p.lc());
            p = poly_sub(f, p, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(p.terms.front());
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

namespace detail {

template <class F>
Poly<F> s_poly(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Monomial l = mon_lcm(a.lm(), b.lm());
    auto pa = poly_mul_term(f, a, mon_div(l, a.lm()), f.inv(a.lc()));
    auto pb = poly_mul_term(f, b, mon_div(l, b.lm()), f.inv(b.lc()));
    return poly_sub(f, pa, pb);
}

template <class F>
Poly<F> make_monic(const F& f, const Poly<F>& p) {
    return poly_scale(f, p, f.inv(p.lc()));
}

} // namespace detail

// Buchberger's algorithm with the coprime-leading-monomial criterion.
// Precondition: every generator has zero constant term (the ideal sits
// inside the maximal ideal); violations raise ConstantTermError.
// A degree cap aborts pathological inputs with DegreeCapError.
template <class F>
GroebnerBasis<F> buchberger(const F& f, std::vector<Poly<F>> gens, int nvars,
                            uint64_t degree_cap = 64) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        for (const auto& t : g.terms)
            if (t.m.is_one())
                throw ConstantTermError("ideal generator has a nonzero constant term");
    }

    GroebnerBasis<F> gb;
    gb.nvars = nvars;
    std::vector<Poly<F>> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(detail::make_monic(f, g));

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    GroebnerBasis<F> work;
    work.nvars = nvars;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (mon_coprime(basis[i].lm(), basis[j].lm())) continue; // Buchberger 1
        work.gens = basis;
        auto r = normal_form(f, detail::s_poly(f, basis[i], basis[j]), work);
        if (r.is_zero()) continue;
        if (r.lm().degree() > degree_cap)
            throw DegreeCapError("Groebner computation exceeded degree cap " +
                                 std::to_string(degree_cap));
        r = detail::make_monic(f, r);
        size_t idx = basis.size();
        basis.push_back(std::move(r));
        for (size_t l = 0; l < idx; ++l) pairs.push_back({l, idx});
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another surviving one. Process in ascending deg-lex order of lm so the
    // result is canonical.
    std::sort(basis.begin(), basis.end(),
              [](const Poly<F>& a, const Poly<F>& b) { return deglex_less(a.lm(), b.lm()); });
    std::vector<Poly<F>> minimal;
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (mon_divides(h.lm(), g.lm())) { redundant = true; break; }
        if (!redundant) minimal.push_back(g);
    }

    // Tail-reduce each generator against the others.
    GroebnerBasis<F> reduced;
    reduced.nvars = nvars;
    for (size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis<F> others;
        others.nvars = nvars;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.gens.push_back(minimal[j]);
        reduced.gens.push_back(detail::make_monic(f, normal_form(f, minimal[i], others)));
    }
    std::sort(reduced.gens.begin(), reduced.gens.end(),
              [](const Poly<F>& a, const Poly<F>& b) { return deglex_less(a.lm(), b.lm()); });
    return reduced;
}

// Monomials outside the leading-term ideal, in ascending deg-lex order (so
// index 0 is the monomial 1). Raises NotMPrimaryError when the staircase is
// infinite, i.e. some variable has no pure power among the leading terms.
template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb) {
    const int nv = gb.nvars;
    std::vector<uint32_t> bound(nv, 0);
    for (int v = 0; v < nv; ++v) {
        bool found = false;
        for (const auto& g : gb.gens) {
            const Monomial& m = g.lm();
            bool pure = m.e[v] > 0;
            for (int w = 0; w < nv && pure; ++w)
                if (w != v && m.e[w] > 0) pure = false;
            if (pure) {
                bound[v] = found ? std::min(bound[v], m.e[v]) : m.e[v];
                found = true;
            }
        }
        if (!found)
            throw NotMPrimaryError("ideal is not m-primary: variable axis " +
                                   std::to_string(v) + " is unbounded in the staircase");
    }

    std::vector<Monomial> out;
    Monomial cur(nv);
    // enumerate the box below the pure-power bounds, filter by divisibility
    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) {
            for (const auto& g : gb.gens)
                if (mon_divides(g.lm(), cur)) return;
            out.push_back(cur);
            return;
        }
        for (uint32_t e = 0; e < bound[v]; ++e) {
            cur.e[v] = e;
            self(self, v + 1);
        }
        cur.e[v] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

} // namespace homolog
