#include <doctest.h>

#include <random>

#include "homolog/field.hpp"
#include "homolog/linalg.hpp"

using namespace homolog;

namespace {

template <class F>
Mat<F> from_ints(const F& f, std::vector<std::vector<long long>> rows) {
    Mat<F> m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = f.from_int(rows[r][c]);
    return m;
}

template <class F>
Mat<F> random_matrix(const F& f, std::mt19937& rng, int rows, int cols, int span) {
    Mat<F> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = f.from_int((long long)(rng() % (2 * span + 1)) - span);
    return m;
}

} // namespace

TEST_CASE("rref identity and rank") {
    GF f2(2);
    auto id = Mat<GF>::identity(f2, 3);
    auto rr = rref(f2, id);
    CHECK(rr.rank == 3);
    CHECK(rr.m.equals(f2, id));
}

TEST_CASE("rref proportional rows over Q") {
    QQ q;
    auto m = from_ints(q, {{2, 4}, {1, 2}});
    auto rr = rref(q, m);
    CHECK(rr.rank == 1);
    CHECK(rr.m.at(0, 0) == mpq_class(1));
    CHECK(rr.m.at(0, 1) == mpq_class(2));
    CHECK(rr.m.at(1, 0) == mpq_class(0));
    CHECK(rr.m.at(1, 1) == mpq_class(0));
}

TEST_CASE("rref zero matrix") {
    GF f5(5);
    Mat<GF> z(2, 5, f5.zero());
    auto rr = rref(f5, z);
    CHECK(rr.rank == 0);
    CHECK(rr.m.equals(f5, z));
}

TEST_CASE("kernel examples") {
    GF f2(2);
    auto m = from_ints(f2, {{1, 1}, {1, 1}});
    auto k = kernel_basis(f2, m);
    CHECK(k.rows() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 1) == 1);

    QQ q;
    auto inv = from_ints(q, {{1, 2}, {3, 4}});
    CHECK(kernel_basis(q, inv).rows() == 0);

    Mat<QQ> z(2, 3, q.zero());
    CHECK(kernel_basis(q, z).rows() == 3);
}

TEST_CASE("solve examples") {
    QQ q;
    auto id = Mat<QQ>::identity(q, 2);
    auto x = solve(q, id, {mpq_class(1), mpq_class(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == mpq_class(1));
    CHECK((*x)[1] == mpq_class(0));

    GF f2(2);
    auto a = from_ints(f2, {{1, 1}});
    auto w = solve(f2, a, {f2.from_int(1)});
    REQUIRE(w.has_value());
    auto check = mat_apply(f2, a, *w);
    CHECK(check[0] == 1);

    auto bad = from_ints(f2, {{0}});
    CHECK(!solve(f2, bad, {f2.from_int(1)}).has_value());
}

TEST_CASE("rank-nullity, exact kernel product, idempotent rref") {
    std::mt19937 rng(12345);
    GF fp(101);
    QQ q;
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 6);
        auto m = random_matrix(fp, rng, rows, cols, 50);
        auto rr = rref(fp, m);
        auto k = kernel_basis(fp, m);
        CHECK(rr.rank + k.rows() == cols);
        // m * k^T = 0 exactly
        auto prod = mat_mul(fp, m, k.transpose());
        CHECK(prod.is_zero(fp));
        auto rr2 = rref(fp, rr.m);
        CHECK(rr2.m.equals(fp, rr.m));

        auto mq = random_matrix(q, rng, rows, cols, 9);
        auto rq = rref(q, mq);
        auto kq = kernel_basis(q, mq);
        CHECK(rq.rank + kq.rows() == cols);
        CHECK(mat_mul(q, mq, kq.transpose()).is_zero(q));
    }
}

TEST_CASE("solve returns exact witnesses when consistent") {
    std::mt19937 rng(999);
    GF fp(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + (int)(rng() % 5), cols = 1 + (int)(rng() % 5);
        auto a = random_matrix(fp, rng, rows, cols, 6);
        std::vector<GF::Elem> x0(cols);
        for (auto& v : x0) v = fp.from_int((long long)(rng() % 7));
        auto b = mat_apply(fp, a, x0);
        auto x = solve(fp, a, b);
        REQUIRE(x.has_value());
        auto b2 = mat_apply(fp, a, *x);
        for (int i = 0; i < rows; ++i) CHECK(b2[i] == b[i]);
    }
}

TEST_CASE("echelon membership and transform coordinates") {
    QQ q;
    Echelon<QQ> e(q, 3);
    CHECK(e.insert({mpq_class(1), mpq_class(2), mpq_class(3)}));
    CHECK(e.insert({mpq_class(0), mpq_class(1), mpq_class(1)}));
    CHECK(!e.insert({mpq_class(1), mpq_class(3), mpq_class(4)}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({mpq_class(2), mpq_class(5), mpq_class(7)}));
    CHECK(!e.contains({mpq_class(0), mpq_class(0), mpq_class(1)}));

    TransformEchelon<QQ> t(q, 3);
    t.insert({mpq_class(1), mpq_class(1), mpq_class(0)});
    t.insert({mpq_class(0), mpq_class(1), mpq_class(1)});
    auto c = t.coords({mpq_class(2), mpq_class(3), mpq_class(1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == mpq_class(2));
    CHECK((*c)[1] == mpq_class(1));
    CHECK(!t.coords({mpq_class(0), mpq_class(0), mpq_class(5)}).has_value());
}
