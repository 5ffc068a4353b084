#include <doctest.h>

#include <random>

#include "homolog/algebra.hpp"

using namespace homolog;

TEST_CASE("build_algebra paper rings") {
    GF f2(2);
    auto r1 = build_algebra(f2, {"x", "y"}, {"x^2", "x*y", "y^2"});
    CHECK(r1->dim() == 3);
    CHECK(r1->loewy() == 2);

    QQ q;
    auto r2 = build_algebra(q, {"x"}, {"x^2"});
    CHECK(r2->dim() == 2);
    CHECK(r2->loewy() == 2);

    auto r3 = build_algebra(q, {"x", "y"}, {"x^2", "y^2"});
    CHECK(r3->dim() == 4);
    CHECK(r3->loewy() == 3);
    CHECK(r3->basis_to_string() == "1 x y x*y");
}

TEST_CASE("m_power_basis dims") {
    GF f2(2);
    auto r1 = build_algebra(f2, {"x", "y"}, {"x^2", "x*y", "y^2"});
    CHECK(r1->m_power_dim(1) == 2);
    CHECK(r1->m_power_dim(2) == 0);
    CHECK(r1->m_power_dim(0) == 3);

    QQ q;
    auto r3 = build_algebra(q, {"x", "y"}, {"x^2", "y^2"});
    CHECK(r3->m_power_dim(2) == 1); // span{xy}
    CHECK(r3->m_power_dim(3) == 0);
}

TEST_CASE("ring invariants") {
    GF f2(2);
    auto r1 = build_algebra(f2, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto i1 = r1->ring_invariants();
    CHECK(i1.length == 3);
    CHECK(i1.embdim == 2);
    CHECK(i1.type == 2);
    CHECK(i1.mult == 3);
    CHECK(i1.is_min_mult);

    QQ q;
    auto r2 = build_algebra(q, {"x"}, {"x^2"});
    auto i2 = r2->ring_invariants();
    CHECK(i2.length == 2);
    CHECK(i2.embdim == 1);
    CHECK(i2.type == 1);
    CHECK(i2.mult == 2);
    CHECK(i2.is_min_mult);

    auto r3 = build_algebra(q, {"x", "y"}, {"x^2", "y^2"});
    auto i3 = r3->ring_invariants();
    CHECK(i3.length == 4);
    CHECK(i3.embdim == 2);
    CHECK(i3.type == 1);
    CHECK(i3.mult == 4);
    CHECK(!i3.is_min_mult);
}

TEST_CASE("example 5.3 ring sizes") {
    GF f2(2);
    auto r = build_algebra(f2, {"x1", "x2", "y"}, {"x1^2", "x1*x2", "x2^2", "y^2"});
    CHECK(r->dim() == 6);
    CHECK(r->loewy() == 3);
    auto inv = r->ring_invariants();
    CHECK(inv.embdim == 3);
    CHECK(inv.type == 2); // socle = (x1 y, x2 y)
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(777);
    GF f5(5);
    auto r = build_algebra(f5, {"x", "y"}, {"x^2-y", "y^2"});
    auto random_elem = [&]() {
        ArtinAlgebra<GF>::RElem e(r->dim());
        for (auto& c : e) c = f5.from_int((long long)(rng() % 5));
        return e;
    };
    auto eq = [&](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    };
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_elem(), b = random_elem(), c = random_elem();
        CHECK(eq(r->multiply(a, b), r->multiply(b, a)));
        CHECK(eq(r->multiply(a, r->multiply(b, c)), r->multiply(r->multiply(a, b), c)));
    }
}

TEST_CASE("filtration dims sum to length, type positive") {
    QQ q;
    for (auto gens : {std::vector<std::string>{"x^2", "y^2"},
                      std::vector<std::string>{"x^2", "x*y", "y^3"},
                      std::vector<std::string>{"x^3", "x*y", "y^2"}}) {
        auto r = build_algebra(q, {"x", "y"}, gens);
        long long total = 0;
        for (int j = 0; j <= r->loewy(); ++j) total += r->m_power_dim(j) - r->m_power_dim(j + 1);
        CHECK(total == r->dim());
        // dims non-increasing
        for (int j = 0; j < r->loewy(); ++j)
            CHECK(r->m_power_dim(j) > r->m_power_dim(j + 1));
        CHECK(r->ring_invariants().type >= 1);
    }
}

TEST_CASE("non-monomial coordinate-changed ideal") {
    GF f5(5);
    // ((x+2y)^2, (x+y)^2): a GL(2) change of (u^2, v^2), length 4
    auto r = build_algebra(f5, {"x", "y"},
                           {"x^2+4*x*y+4*y^2", "x^2+2*x*y+y^2"});
    CHECK(r->dim() == 4);
    auto inv = r->ring_invariants();
    CHECK(inv.embdim == 2);
}
