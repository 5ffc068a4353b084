#include <doctest.h>

#include "homolog/hom.hpp"

using namespace homolog;

namespace {

template <class F>
ModulePresentation<F> cyclic(const AlgebraPtr<F>& ring, std::vector<std::string> rels) {
    ModulePresentation<F> p;
    p.ring = ring;
    p.gens = 1;
    for (const auto& s : rels)
        p.relations.push_back({ring->from_poly(parse_poly(ring->field(), s, ring->vars()))});
    return p;
}

AlgebraPtr<GF> mm_ring() {
    GF f2(2);
    return build_algebra(f2, {"x", "y"}, {"x^2", "x*y", "y^2"});
}

AlgebraPtr<GF> ex53_ring() {
    GF f2(2);
    return build_algebra(f2, {"x1", "x2", "y"}, {"x1^2", "x1*x2", "x2^2", "y^2"});
}

} // namespace

TEST_CASE("tor examples") {
    auto r = mm_ring();
    auto k = residue_field(r);
    CHECK(tor_module(k, k, 0)->dim() == 1);
    for (int i = 0; i <= 4; ++i) {
        long long expect = 1ll << i; // beta_i(k) = 2^i
        CHECK(tor_module(k, k, i)->dim() == expect);
        CHECK(len_tor(k, k, i) == expect);
    }
    auto fr = free_module(r, 2);
    auto my = realize(cyclic(r, {"x"}));
    for (int i = 1; i <= 3; ++i) CHECK(tor_module(fr, my, i)->is_zero());
    CHECK(tor_module(fr, my, 0)->dim() == 2 * my->dim());
}

TEST_CASE("ext examples") {
    QQ q;
    auto hyp = build_algebra(q, {"x"}, {"x^2"});
    auto k = residue_field(hyp);
    auto fr = free_module(hyp, 1);
    CHECK(ext_module(k, fr, 0)->dim() == 1); // socle of a self-injective ring
    for (int i = 1; i <= 3; ++i) CHECK(ext_module(k, fr, i)->is_zero());

    auto r = ex53_ring();
    auto my = realize(cyclic(r, {"y"}));
    auto k2 = residue_field(r);
    auto bs = betti_sequence(my, 4);
    for (int i = 0; i <= 4; ++i) {
        CHECK(ext_module(my, k2, i)->dim() == bs.values[i]);
        CHECK(len_ext(my, k2, i) == bs.values[i]);
    }

    auto e = matlis_dual(free_module(mm_ring(), 1));
    auto km = residue_field(e->ring());
    CHECK(ext_module(km, e, 0)->dim() == 1);
    for (int i = 1; i <= 3; ++i) CHECK(ext_module(km, e, i)->is_zero());
}

TEST_CASE("pair sequences") {
    auto r = mm_ring();
    auto k = residue_field(r);
    auto ps = pair_sequences(k, k, 4);
    CHECK(ps.ext_mu.values.values == std::vector<long long>{1, 2, 4, 8, 16});
    CHECK(ps.tor_mu.values.values == std::vector<long long>{1, 2, 4, 8, 16});
    CHECK(ps.ext_len.values.values == ps.ext_mu.values.values); // k-vector-space valued
    CHECK(ps.ext_mu.ann_exponent == 1);

    auto fr = free_module(r, 1);
    auto my = realize(cyclic(r, {"x"}));
    auto ps2 = pair_sequences(fr, my, 3);
    for (int i = 1; i <= 3; ++i) {
        CHECK(ps2.ext_len.values.values[i] == 0);
        CHECK(ps2.tor_len.values.values[i] == 0);
    }
}

TEST_CASE("tor is balanced") {
    auto r = ex53_ring();
    auto my = realize(cyclic(r, {"y"}));
    auto u = realize(cyclic(r, {"x1", "x2"}));
    auto k = residue_field(r);
    std::vector<std::pair<RealizationPtr<GF>, RealizationPtr<GF>>> pairs = {
        {my, u}, {k, my}, {u, u}, {my, my}};
    for (auto& [a, b] : pairs)
        for (int i = 0; i <= 4; ++i)
            CHECK(tor_module(a, b, i)->dim() == tor_module(b, a, i)->dim());
}

TEST_CASE("ext-tor duality at dimension zero") {
    auto r = ex53_ring();
    auto my = realize(cyclic(r, {"y"}));
    auto k = residue_field(r);
    auto ev = ext_tor_duality_check(k, k, 4);
    std::vector<long long> lhs, rhs;
    for (auto& [a, b] : ev) {
        lhs.push_back(a);
        rhs.push_back(b);
    }
    CHECK(lhs == std::vector<long long>{3, 7, 15, 31}); // beta_i(k) at i = 1..4
    CHECK(lhs == rhs);

    auto ev2 = ext_tor_duality_check(my, my, 4);
    for (auto& [a, b] : ev2) CHECK(a == b);

    auto fr = free_module(r, 1);
    auto ev3 = ext_tor_duality_check(my, fr, 3);
    for (auto& [a, b] : ev3) {
        CHECK(a == 0);
        CHECK(b == 0);
    }
}

TEST_CASE("ext and tor dims against dual routes") {
    auto r = mm_ring();
    auto my = realize(cyclic(r, {"x"}));
    auto e = matlis_dual(free_module(r, 1));
    for (int i = 0; i <= 3; ++i) {
        // dim Ext^i(M,N) = dim Tor_i(M, N-dual)
        CHECK(ext_module(my, e, i)->dim() == tor_module(my, matlis_dual(e), i)->dim());
        // mu and type bounded by length
        auto ei = module_invariants(*ext_module(my, e, i));
        CHECK(ei.mu <= ei.length);
        CHECK(ei.type <= ei.length);
    }
}

TEST_CASE("m^loewy annihilates ext and tor") {
    auto r = ex53_ring();
    auto my = realize(cyclic(r, {"y"}));
    auto u = realize(cyclic(r, {"x1", "x2"}));
    for (int i = 0; i <= 3; ++i) {
        auto t = tor_module(my, u, i);
        auto e = ext_module(my, u, i);
        CHECK(loewy_length(*t) <= r->loewy());
        CHECK(loewy_length(*e) <= r->loewy());
    }
}

TEST_CASE("ring mismatch raises") {
    auto r1 = mm_ring();
    auto r2 = ex53_ring();
    CHECK_THROWS_AS(tor_module(residue_field(r1), residue_field(r2), 1), RingMismatchError);
    CHECK_THROWS_AS(len_tor(residue_field(r1), residue_field(r2), 1), RingMismatchError);
}
