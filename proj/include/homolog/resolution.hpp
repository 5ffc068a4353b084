#pragma once

#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "homolog/asymptotics.hpp"
#include "homolog/module.hpp"
#include "homolog/rowspace.hpp"

namespace homolog {

inline long long resolution_budget_default() {
    if (const char* s = std::getenv("HOMOLOG_BUDGET")) {
        long long v = std::atoll(s);
        if (v > 0) return v;
    }
    return 1ll << 24;
}

// Minimal free resolution engine. Steps are computed lazily; step n holds
// beta_n, the minimal generators of the n-th syzygy (columns of d_n), and
// the next syzygy S_{n+1} as kernel rows inside R^{beta_n}.
template <class F>
class ResolutionBase {
public:
    using RElem = typename ArtinAlgebra<F>::RElem;

    virtual ~ResolutionBase() = default;

    virtual const RealizationPtr<F>& module() const = 0;
    virtual void ensure_depth(int n) = 0;
    virtual int computed_depth() const = 0;
    virtual long long beta(int n) = 0;
    virtual long long syzygy_dim(int n) = 0; // lambda(S_n); n = 0 gives lambda(M)
    // column j of d_n as beta_{n-1} ring elements (n >= 1)
    virtual std::vector<RElem> d_column(int n, int j) = 0;
    virtual bool minimality_ok(int n) = 0; // every entry of d_n lies in m
    virtual bool dd_zero(int n) = 0;       // d_{n-1} o d_n = 0 (n >= 1; d_0 = cover)
    virtual bool exactness_ok(int n) = 0;  // rank Phi_n = lambda(S_n)
    // rank of d_i (x) B (equivalently of Hom(d_i, B-dual)); i >= 1
    virtual long long rank_d_tensor(int i, const ModuleRealization<F>& B) = 0;
    // rank of the image of d_{i+1} (x) B, computed from the syzygy span
    virtual long long rank_im_span(int i, const ModuleRealization<F>& B) = 0;
    // S_{n+1} rows unpacked, ambient coordinate (l, j) at index l*beta_n + j
    virtual std::vector<std::vector<typename F::Elem>> syzygy_rows_unpacked(int n) = 0;
};

template <class F, class Rows>
class ResolutionImpl final : public ResolutionBase<F> {
public:
    using RElem = typename ArtinAlgebra<F>::RElem;

    explicit ResolutionImpl(RealizationPtr<F> m)
        : m_(std::move(m)), budget_(resolution_budget_default()) {}

    const RealizationPtr<F>& module() const override { return m_; }
    int computed_depth() const override { return (int)steps_.size() - 1; }

    void ensure_depth(int n) override {
        while ((int)steps_.size() <= n) compute_step((int)steps_.size());
    }

    long long beta(int n) override {
        ensure_depth(n);
        return steps_[n].beta;
    }

    long long syzygy_dim(int n) override {
        if (n == 0) return m_->dim();
        ensure_depth(n - 1);
        return (long long)steps_[n - 1].kernel.rows();
    }

    std::vector<RElem> d_column(int n, int j) override {
        ensure_depth(n);
        if (n < 1) throw HomologError("d_column wants n >= 1");
        const auto& f = field();
        const int lam = ring().dim();
        const long long prev = steps_[n - 1].beta;
        std::vector<RElem> col((size_t)prev, RElem(lam, f.zero()));
        for (long long r = 0; r < prev; ++r)
            for (int l = 0; l < lam; ++l) col[r][l] = steps_[n].gens.get(j, l, (int)r);
        return col;
    }

    bool minimality_ok(int n) override {
        ensure_depth(n);
        if (n < 1) return true;
        const auto& f = field();
        const auto& g = steps_[n].gens;
        for (size_t r = 0; r < g.rows(); ++r)
            for (int j = 0; j < g.nslots(); ++j)
                if (!f.is_zero(g.get(r, 0, j))) return false;
        return true;
    }

    bool dd_zero(int n) override {
        ensure_depth(n);
        if (n < 1) return true;
        // apply the previous cover/differential map to every column of d_n
        const auto& f = field();
        const int lam = ring().dim();
        Rows cols = (n == 1) ? cover_columns() : phi_columns(n - 1);
        const long long prev_beta = steps_[n - 1].beta;
        const auto& g = steps_[n].gens;
        Rows acc(f, cols.lambda(), cols.nslots());
        for (size_t r = 0; r < g.rows(); ++r) {
            size_t a = acc.append_zero();
            for (int l = 0; l < lam; ++l)
                for (long long j = 0; j < prev_beta; ++j) {
                    auto c = g.get(r, l, (int)j);
                    if (!f.is_zero(c)) acc.add_scaled(a, cols, (size_t)(l * prev_beta + j), c);
                }
            if (!acc.row_is_zero(a)) return false;
            acc.pop_back();
        }
        return true;
    }

    bool exactness_ok(int n) override {
        ensure_depth(n);
        return steps_[n].exact;
    }

    long long rank_d_tensor(int i, const ModuleRealization<F>& B) override {
        ensure_depth(i);
        if (i < 1 || B.is_zero() || steps_[i].beta == 0) return 0;
        auto cts = hom_coeffs(B);
        const auto& f = field();
        const int prev = (int)steps_[i - 1].beta;
        StreamEchelon<F, Rows> ech(f, B.dim(), prev);
        Rows scratch(f, B.dim(), prev);
        const auto& g = steps_[i].gens;
        for (size_t j = 0; j < g.rows(); ++j)
            for (const auto& C : cts) {
                size_t r = scratch.append_seg_combine(g, j, C);
                ech.insert(scratch, r);
                scratch.pop_back();
            }
        return ech.rank();
    }

    std::vector<std::vector<typename F::Elem>> syzygy_rows_unpacked(int n) override {
        ensure_depth(n);
        const auto& f = field();
        const auto& K = steps_[n].kernel;
        std::vector<std::vector<typename F::Elem>> out;
        out.reserve(K.rows());
        for (size_t r = 0; r < K.rows(); ++r) {
            std::vector<typename F::Elem> v((size_t)K.width(), f.zero());
            for (int l = 0; l < K.lambda(); ++l)
                for (int j = 0; j < K.nslots(); ++j) v[(size_t)l * K.nslots() + j] = K.get(r, l, j);
            out.push_back(std::move(v));
        }
        return out;
    }

    long long rank_im_span(int i, const ModuleRealization<F>& B) override {
        ensure_depth(i);
        if (B.is_zero() || steps_[i].beta == 0) return 0;
        auto cts = hom_coeffs(B);
        const auto& f = field();
        const int slots = (int)steps_[i].beta;
        StreamEchelon<F, Rows> ech(f, B.dim(), slots);
        Rows scratch(f, B.dim(), slots);
        const auto& K = steps_[i].kernel;
        for (size_t s = 0; s < K.rows(); ++s)
            for (const auto& C : cts) {
                size_t r = scratch.append_seg_combine(K, s, C);
                ech.insert(scratch, r);
                scratch.pop_back();
            }
        return ech.rank();
    }

private:
    struct Step {
        long long beta = 0;
        Rows gens;   // beta rows in the previous ambient
        Rows kernel; // S_{n+1} rows in R^beta
        bool exact = true;
        Step(Rows g, Rows k) : gens(std::move(g)), kernel(std::move(k)) {}
    };

    const ArtinAlgebra<F>& ring() const { return *m_->ring(); }
    const F& field() const { return ring().field(); }

    // columns of the cover map R^{beta_0} -> M, ordered (l major, j minor)
    Rows cover_columns() {
        const auto& f = field();
        const int lam = ring().dim();
        const long long b0 = steps_[0].beta;
        Rows cols(f, 1, m_->dim());
        cols.reserve((size_t)(lam * b0));
        for (int l = 0; l < lam; ++l) {
            const Mat<F>& act = m_->basis_action(l);
            for (long long j = 0; j < b0; ++j) {
                size_t r = cols.append_zero();
                for (int t = 0; t < m_->dim(); ++t) {
                    auto acc = f.zero();
                    for (int u = 0; u < m_->dim(); ++u)
                        if (!f.is_zero(act.at(t, u)))
                            acc = f.add(acc, f.mul(act.at(t, u), steps_[0].gens.get(j, 0, u)));
                    if (!f.is_zero(acc)) cols.set(r, 0, t, acc);
                }
            }
        }
        return cols;
    }

    // columns of Phi_n: R^{beta_n} -> S_n inside the previous ambient,
    // column (l, j) = b_l * gens_n[j], built along the staircase parents
    Rows phi_columns(int n) {
        const auto& f = field();
        const int lam = ring().dim();
        const long long b = steps_[n].beta;
        const auto& g = steps_[n].gens;
        Rows cols(f, g.lambda(), g.nslots());
        cols.reserve((size_t)(lam * b));
        for (long long j = 0; j < b; ++j) cols.append_copy(g, (size_t)j);
        for (int l = 1; l < lam; ++l) {
            auto [v, parent] = ring().staircase_parent(l);
            const Mat<F>& X = ring().var_action(v);
            for (long long j = 0; j < b; ++j)
                cols.append_seg_combine(cols, (size_t)(parent * b + j), X);
        }
        return cols;
    }

    void compute_step(int n) {
        const auto& f = field();
        const int lam = ring().dim();
        if (n == 0) {
            auto gcoords = m_->minimal_generator_coords();
            const long long b0 = (long long)gcoords.size();
            Rows gens(f, 1, m_->dim());
            for (int c : gcoords) {
                size_t r = gens.append_zero();
                gens.set(r, 0, c, f.one());
            }
            check_budget(b0);
            steps_.emplace_back(std::move(gens), Rows(f, lam, (int)b0));
            steps_[0].beta = b0;
            // S_1 = kernel of the cover
            Rows eq = cover_columns().transposed(lam, (int)b0);
            auto kr = kernel_of_rows(f, eq, lam, (int)b0);
            steps_[0].exact = (kr.rank == m_->dim()); // cover surjective
            steps_[0].kernel = std::move(kr.kernel);
            return;
        }

        const Rows& S = steps_[n - 1].kernel; // shape (lam, beta_{n-1})
        const long long sdim = (long long)S.rows();
        const int slots = S.nslots();
        StreamEchelon<F, Rows> ech(f, lam, slots);
        Rows scratch(f, lam, slots);
        for (int v = 0; v < ring().nvars(); ++v) {
            const Mat<F>& X = ring().var_action(v);
            for (size_t s = 0; s < S.rows(); ++s) {
                size_t r = scratch.append_seg_combine(S, s, X);
                ech.insert(scratch, r);
                scratch.pop_back();
            }
        }
        const long long mrank = ech.rank();
        Rows gens(f, lam, slots);
        for (size_t s = 0; s < S.rows(); ++s) {
            size_t r = scratch.append_copy(S, s);
            bool fresh = ech.insert(scratch, r);
            scratch.pop_back();
            if (fresh) gens.append_copy(S, s);
        }
        const long long beta = (long long)gens.rows();
        if (beta != sdim - mrank)
            throw HomologError("syzygy generator count mismatch");
        check_budget(beta);

        steps_.emplace_back(std::move(gens), Rows(f, lam, (int)beta));
        steps_[n].beta = beta;
        if (beta == 0) {
            steps_[n].exact = (sdim == 0);
            return;
        }
        Rows eq = phi_columns(n).transposed(lam, (int)beta);
        auto kr = kernel_of_rows(f, eq, lam, (int)beta);
        steps_[n].exact = (kr.rank == sdim);
        steps_[n].kernel = std::move(kr.kernel);
    }

    void check_budget(long long beta) {
        used_ += beta * ring().dim();
        if (used_ > budget_)
            throw BudgetExceededError(
                "resolution k-dimension budget exceeded (" + std::to_string(used_) + " > " +
                std::to_string(budget_) + "); raise HOMOLOG_BUDGET or lower the depth");
    }

    // coefficient matrices C_t with C_t[a][l] = rho_B(b_l)[a][t]
    std::vector<Mat<F>> hom_coeffs(const ModuleRealization<F>& B) {
        const auto& f = field();
        const int lam = ring().dim();
        std::vector<Mat<F>> cts;
        for (int t = 0; t < B.dim(); ++t) {
            Mat<F> C(B.dim(), lam, f.zero());
            for (int l = 0; l < lam; ++l) {
                const Mat<F>& act = B.basis_action(l);
                for (int a = 0; a < B.dim(); ++a) C.at(a, l) = act.at(a, t);
            }
            cts.push_back(std::move(C));
        }
        return cts;
    }

    RealizationPtr<F> m_;
    long long budget_;
    long long used_ = 0;
    std::vector<Step> steps_;
};

// Cached per realization; GF(2) uses the bit-packed backend.
template <class F>
std::shared_ptr<ResolutionBase<F>> get_resolution(const RealizationPtr<F>& m) {
    if (m->resolution_cache_)
        return std::static_pointer_cast<ResolutionBase<F>>(m->resolution_cache_);
    std::shared_ptr<ResolutionBase<F>> eng;
    if constexpr (std::is_same_v<F, GF>) {
        if (m->field().p() == 2)
            eng = std::make_shared<ResolutionImpl<GF, PackedRows>>(m);
        else
            eng = std::make_shared<ResolutionImpl<GF, DenseRows<GF>>>(m);
    } else {
        eng = std::make_shared<ResolutionImpl<F, DenseRows<F>>>(m);
    }
    m->resolution_cache_ = eng;
    return eng;
}

// Spec-facing resolution value: ranks plus materializable differentials.
template <class F>
struct FreeResolution {
    using RElem = typename ArtinAlgebra<F>::RElem;
    RealizationPtr<F> module;
    int depth = 0;
    std::vector<long long> ranks;
    std::shared_ptr<ResolutionBase<F>> engine;

    // d_n as a beta_{n-1} x beta_n matrix over R (row-major)
    std::vector<std::vector<RElem>> differential(int n) const {
        std::vector<std::vector<RElem>> d((size_t)ranks[n - 1]);
        for (long long r = 0; r < ranks[n - 1]; ++r) d[r].resize(ranks[n]);
        for (long long j = 0; j < ranks[n]; ++j) {
            auto col = engine->d_column(n, (int)j);
            for (long long r = 0; r < ranks[n - 1]; ++r) d[r][j] = col[r];
        }
        return d;
    }
};

template <class F>
FreeResolution<F> resolve(const RealizationPtr<F>& m, int depth) {
    FreeResolution<F> out;
    out.module = m;
    out.depth = depth;
    out.engine = get_resolution(m);
    out.engine->ensure_depth(depth);
    for (int n = 0; n <= depth; ++n) out.ranks.push_back(out.engine->beta(n));
    return out;
}

template <class F>
InvariantSequence betti_sequence(const RealizationPtr<F>& m, int depth,
                                 const std::string& label = "betti") {
    auto eng = get_resolution(m);
    eng->ensure_depth(depth);
    std::vector<long long> v;
    for (int n = 0; n <= depth; ++n) v.push_back(eng->beta(n));
    return InvariantSequence(std::move(v), label);
}

template <class F>
InvariantSequence bass_sequence(const RealizationPtr<F>& m, int depth,
                                const std::string& label = "bass") {
    auto seq = betti_sequence(matlis_dual(m), depth, label);
    return seq;
}

} // namespace homolog
