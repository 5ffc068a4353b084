#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "homolog/algebra.hpp"

namespace homolog {

// M = coker(R^q -> R^p), rows of `entries` are the q relations.
template <class F>
struct ModulePresentation {
    using RElem = typename ArtinAlgebra<F>::RElem;
    AlgebraPtr<F> ring;
    int gens = 0;                               // p
    std::vector<std::vector<RElem>> relations;  // q rows, each p entries in R
};

template <class F>
class ModuleRealization;

template <class F>
using RealizationPtr = std::shared_ptr<ModuleRealization<F>>;

// A finite-length R-module as a k-space with commuting variable actions.
template <class F>
class ModuleRealization : public std::enable_shared_from_this<ModuleRealization<F>> {
public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    ModuleRealization(AlgebraPtr<F> ring, int dim, std::vector<Mat<F>> actions,
                      Mat<F> gen_coords)
        : ring_(std::move(ring)), dim_(dim), action_(std::move(actions)),
          gen_coords_(std::move(gen_coords)) {}

    const AlgebraPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    int dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    int nvars() const { return ring_->nvars(); }
    const Mat<F>& action(int v) const { return action_[v]; }
    const Mat<F>& gen_coords() const { return gen_coords_; }

    // Action of basis monomial l (computed through the staircase parent
    // chain; standard monomials are closed under division).
    const Mat<F>& basis_action(int l) const {
        if (basis_action_.empty()) {
            const auto& f = field();
            basis_action_.resize(ring_->dim());
            basis_action_[0] = Mat<F>::identity(f, dim_);
            const auto& basis = ring_->basis();
            for (int j = 1; j < ring_->dim(); ++j) {
                int v = 0;
                while (basis[j].e[v] == 0) ++v;
                Monomial parent = basis[j];
                parent.e[v] -= 1;
                int pj = -1;
                for (int t = 0; t < j; ++t)
                    if (basis[t] == parent) { pj = t; break; }
                basis_action_[j] = mat_mul(f, action_[v], basis_action_[pj]);
            }
        }
        return basis_action_[l];
    }

    // rho_M(r) for an arbitrary ring element.
    Vec act(const typename ArtinAlgebra<F>::RElem& r, const Vec& v) const {
        const auto& f = field();
        Vec out(dim_, f.zero());
        for (int l = 0; l < ring_->dim(); ++l) {
            if (f.is_zero(r[l])) continue;
            auto w = mat_apply(f, basis_action(l), v);
            for (int i = 0; i < dim_; ++i) out[i] = f.add(out[i], f.mul(r[l], w[i]));
        }
        return out;
    }

    // Columns spanning mM, as an echelon.
    Echelon<F> m_span() const {
        const auto& f = field();
        Echelon<F> ech(f, dim_);
        for (const auto& a : action_)
            for (int c = 0; c < dim_; ++c) {
                Vec col(dim_);
                for (int r = 0; r < dim_; ++r) col[r] = a.at(r, c);
                ech.insert(std::move(col));
            }
        return ech;
    }

    // Deterministic minimal generators: unit vectors completing mM, in
    // ascending coordinate order. Empty for the zero module.
    std::vector<int> minimal_generator_coords() const {
        const auto& f = field();
        auto ech = m_span();
        std::vector<int> picks;
        for (int c = 0; c < dim_ && ech.rank() < dim_; ++c) {
            Vec e(dim_, f.zero());
            e[c] = f.one();
            if (ech.insert(std::move(e))) picks.push_back(c);
        }
        return picks;
    }

    mutable std::vector<Mat<F>> basis_action_; // lazy
    mutable std::shared_ptr<void> resolution_cache_;
    mutable RealizationPtr<F> dual_cache_;

private:
    AlgebraPtr<F> ring_;
    int dim_;
    std::vector<Mat<F>> action_;
    Mat<F> gen_coords_; // dim x p, images of presentation generators
};

struct ModuleInvariants {
    long long length = 0;
    long long mu = 0;
    long long type = 0;
    long long mult = 0;
    bool is_min_mult = false;
    bool is_ulrich = false;
};

namespace detail {

// Apply the block-diagonal action of variable v on R^p (slot-major layout:
// coordinate of (slot j, basis l) is j*lambda + l).
template <class F>
std::vector<typename F::Elem> block_var_apply(const ArtinAlgebra<F>& ring, int v,
                                              const std::vector<typename F::Elem>& in,
                                              int slots) {
    const auto& f = ring.field();
    const int lam = ring.dim();
    std::vector<typename F::Elem> out((size_t)slots * lam, f.zero());
    const Mat<F>& X = ring.var_action(v);
    for (int j = 0; j < slots; ++j) {
        const auto* src = in.data() + (size_t)j * lam;
        auto* dst = out.data() + (size_t)j * lam;
        for (int a = 0; a < lam; ++a) {
            auto acc = f.zero();
            for (int b = 0; b < lam; ++b)
                if (!f.is_zero(X.at(a, b))) acc = f.add(acc, f.mul(X.at(a, b), src[b]));
            dst[a] = acc;
        }
    }
    return out;
}

} // namespace detail

// Realize coker(R^q -> R^p) as a k-space with induced actions.
template <class F>
RealizationPtr<F> realize(const ModulePresentation<F>& pres) {
    const auto& ring = *pres.ring;
    const auto& f = ring.field();
    const int lam = ring.dim();
    const int p = pres.gens;
    const int amb = p * lam;

    // k-span of the relation submodule: basis-multiples of each relation row
    Echelon<F> rel(f, amb);
    for (const auto& row : pres.relations) {
        for (int l = 0; l < lam; ++l) {
            std::vector<typename F::Elem> v(amb, f.zero());
            const Mat<F>& act = ring.basis_action(l);
            for (int j = 0; j < p; ++j) {
                for (int a = 0; a < lam; ++a) {
                    auto acc = f.zero();
                    for (int b = 0; b < lam; ++b)
                        if (!f.is_zero(act.at(a, b)))
                            acc = f.add(acc, f.mul(act.at(a, b), row[j][b]));
                    v[(size_t)j * lam + a] = acc;
                }
            }
            rel.insert(std::move(v));
        }
    }

    std::vector<char> is_piv(amb, 0);
    for (int i = 0; i < rel.rank(); ++i) is_piv[rel.pivot(i)] = 1;
    std::vector<int> qcoord;
    for (int c = 0; c < amb; ++c)
        if (!is_piv[c]) qcoord.push_back(c);
    const int dim = (int)qcoord.size();

    auto project = [&](std::vector<typename F::Elem> v) {
        rel.reduce(v);
        std::vector<typename F::Elem> out(dim);
        for (int i = 0; i < dim; ++i) out[i] = v[qcoord[i]];
        return out;
    };

    std::vector<Mat<F>> actions;
    for (int v = 0; v < ring.nvars(); ++v) {
        Mat<F> A(dim, dim, f.zero());
        for (int c = 0; c < dim; ++c) {
            std::vector<typename F::Elem> e(amb, f.zero());
            e[qcoord[c]] = f.one();
            auto col = project(detail::block_var_apply(ring, v, e, p));
            for (int r = 0; r < dim; ++r) A.at(r, c) = col[r];
        }
        actions.push_back(std::move(A));
    }

    Mat<F> gens(dim, p, f.zero());
    for (int j = 0; j < p; ++j) {
        std::vector<typename F::Elem> e(amb, f.zero());
        e[(size_t)j * lam] = f.one();
        auto col = project(std::move(e));
        for (int r = 0; r < dim; ++r) gens.at(r, j) = col[r];
    }

    return std::make_shared<ModuleRealization<F>>(pres.ring, dim, std::move(actions),
                                                  std::move(gens));
}

template <class F>
RealizationPtr<F> free_module(const AlgebraPtr<F>& ring, int r) {
    const auto& f = ring->field();
    const int lam = ring->dim();
    std::vector<Mat<F>> actions;
    for (int v = 0; v < ring->nvars(); ++v) {
        Mat<F> A(r * lam, r * lam, f.zero());
        const Mat<F>& X = ring->var_action(v);
        for (int j = 0; j < r; ++j)
            for (int a = 0; a < lam; ++a)
                for (int b = 0; b < lam; ++b)
                    A.at(j * lam + a, j * lam + b) = X.at(a, b);
        actions.push_back(std::move(A));
    }
    Mat<F> gens(r * lam, r, f.zero());
    for (int j = 0; j < r; ++j) gens.at(j * lam, j) = f.one();
    return std::make_shared<ModuleRealization<F>>(ring, r * lam, std::move(actions),
                                                  std::move(gens));
}

template <class F>
RealizationPtr<F> residue_field(const AlgebraPtr<F>& ring) {
    const auto& f = ring->field();
    std::vector<Mat<F>> actions(ring->nvars(), Mat<F>(1, 1, f.zero()));
    Mat<F> gens(1, 1, f.one());
    return std::make_shared<ModuleRealization<F>>(ring, 1, std::move(actions),
                                                  std::move(gens));
}

template <class F>
RealizationPtr<F> zero_module(const AlgebraPtr<F>& ring) {
    std::vector<Mat<F>> actions(ring->nvars(), Mat<F>(0, 0));
    return std::make_shared<ModuleRealization<F>>(ring, 0, std::move(actions), Mat<F>(0, 0));
}

template <class F>
ModuleInvariants module_invariants(const ModuleRealization<F>& m) {
    ModuleInvariants inv;
    if (m.is_zero()) return inv;
    const auto& f = m.field();
    const int dim = m.dim();
    inv.length = dim;
    inv.mult = dim;

    auto mspan = m.m_span();
    inv.mu = dim - mspan.rank();

    Mat<F> stack(0, dim);
    for (int v = 0; v < m.nvars(); ++v) stack = mat_vstack(stack, m.action(v));
    inv.type = dim - rank(f, stack);

    // m^2 M = 0 iff every action kills mM
    bool m2_zero = true;
    for (int i = 0; i < mspan.rank() && m2_zero; ++i)
        for (int v = 0; v < m.nvars() && m2_zero; ++v) {
            auto w = mat_apply(f, m.action(v), mspan.basis_row(i));
            for (const auto& x : w)
                if (!f.is_zero(x)) { m2_zero = false; break; }
        }
    inv.is_min_mult = m2_zero;
    inv.is_ulrich = mspan.rank() == 0;
    return inv;
}

// Least h with m^h M = 0 (the Loewy length of M).
template <class F>
int loewy_length(const ModuleRealization<F>& m) {
    if (m.is_zero()) return 0;
    const auto& f = m.field();
    Mat<F> cur = Mat<F>::identity(f, m.dim());
    int h = 0;
    while (cur.rows() > 0) {
        Echelon<F> ech(f, m.dim());
        for (int v = 0; v < m.nvars(); ++v)
            for (int r = 0; r < cur.rows(); ++r)
                ech.insert(mat_apply(f, m.action(v), cur.row(r)));
        Mat<F> next(ech.rank(), m.dim());
        for (int i = 0; i < ech.rank(); ++i) next.set_row(i, ech.basis_row(i));
        cur = std::move(next);
        ++h;
    }
    return h;
}

// Matlis dual: transposed actions on the dual space; lengths preserved,
// mu and type swap. Cached on the realization.
template <class F>
RealizationPtr<F> matlis_dual(const RealizationPtr<F>& m) {
    if (m->dual_cache_) return m->dual_cache_;
    const auto& f = m->field();
    std::vector<Mat<F>> actions;
    for (int v = 0; v < m->nvars(); ++v) actions.push_back(m->action(v).transpose());
    auto d = std::make_shared<ModuleRealization<F>>(m->ring(), m->dim(), std::move(actions),
                                                    Mat<F>(m->dim(), 0));
    m->dual_cache_ = d;
    return d;
}

template <class F>
RealizationPtr<F> direct_sum(const RealizationPtr<F>& a, const RealizationPtr<F>& b) {
    if (a->ring() != b->ring())
        throw RingMismatchError("direct_sum of modules over different rings");
    const auto& f = a->field();
    const int da = a->dim(), db = b->dim();
    std::vector<Mat<F>> actions;
    for (int v = 0; v < a->nvars(); ++v) {
        Mat<F> A(da + db, da + db, f.zero());
        for (int r = 0; r < da; ++r)
            for (int c = 0; c < da; ++c) A.at(r, c) = a->action(v).at(r, c);
        for (int r = 0; r < db; ++r)
            for (int c = 0; c < db; ++c) A.at(da + r, da + c) = b->action(v).at(r, c);
        actions.push_back(std::move(A));
    }
    const int pa = a->gen_coords().cols(), pb = b->gen_coords().cols();
    Mat<F> gens(da + db, pa + pb, f.zero());
    for (int r = 0; r < da; ++r)
        for (int c = 0; c < pa; ++c) gens.at(r, c) = a->gen_coords().at(r, c);
    for (int r = 0; r < db; ++r)
        for (int c = 0; c < pb; ++c) gens.at(da + r, pa + c) = b->gen_coords().at(r, c);
    return std::make_shared<ModuleRealization<F>>(a->ring(), da + db, std::move(actions),
                                                  std::move(gens));
}

// Syzygy data: the realized kernel of the minimal cover R^mu(M) -> M plus
// the kernel rows in the ambient R^mu (slot-major), which presentations and
// resolutions reuse.
template <class F>
struct SyzygyData {
    RealizationPtr<F> omega;
    int cover_rank = 0;             // mu(M)
    Mat<F> kernel_rows;             // rows span Omega inside R^mu
    std::vector<int> free_cols;     // kernel std-form coordinates
};

template <class F>
SyzygyData<F> syzygy_data(const RealizationPtr<F>& m) {
    if (m->is_zero()) throw ZeroModuleError("syzygy of the zero module");
    const auto& ring = *m->ring();
    const auto& f = ring.field();
    const int lam = ring.dim();
    auto gens = m->minimal_generator_coords();
    const int mu = (int)gens.size();
    const int amb = mu * lam;

    // cover map R^mu -> M, columns over (slot j, basis l)
    Mat<F> cov(m->dim(), amb, f.zero());
    for (int j = 0; j < mu; ++j) {
        for (int l = 0; l < lam; ++l) {
            const Mat<F>& act = m->basis_action(l);
            for (int r = 0; r < m->dim(); ++r)
                cov.at(r, (size_t)j * lam + l) = act.at(r, gens[j]);
        }
    }

    auto rr = rref(f, cov);
    std::vector<char> is_piv(amb, 0);
    for (int c : rr.pivots) is_piv[c] = 1;
    SyzygyData<F> out;
    out.cover_rank = mu;
    const int kdim = amb - rr.rank;
    out.kernel_rows = Mat<F>(kdim, amb, f.zero());
    int kr = 0;
    for (int c = 0; c < amb; ++c) {
        if (is_piv[c]) continue;
        out.free_cols.push_back(c);
        out.kernel_rows.at(kr, c) = f.one();
        for (int i = 0; i < rr.rank; ++i)
            out.kernel_rows.at(kr, rr.pivots[i]) = f.neg(rr.m.at(i, c));
        ++kr;
    }

    // induced actions in kernel coordinates (free columns are a coordinate
    // system for the kernel in standard form)
    std::vector<Mat<F>> actions;
    for (int v = 0; v < ring.nvars(); ++v) {
        Mat<F> A(kdim, kdim, f.zero());
        for (int c = 0; c < kdim; ++c) {
            auto w = detail::block_var_apply(ring, v, out.kernel_rows.row(c), mu);
            for (int r = 0; r < kdim; ++r) A.at(r, c) = w[out.free_cols[r]];
        }
        actions.push_back(std::move(A));
    }
    out.omega = std::make_shared<ModuleRealization<F>>(m->ring(), kdim, std::move(actions),
                                                       Mat<F>(kdim, 0));
    return out;
}

template <class F>
RealizationPtr<F> syzygy(const RealizationPtr<F>& m) {
    return syzygy_data(m).omega;
}

// Minimal presentation: p = mu(M) generators, q = mu(Omega(M)) relations.
template <class F>
ModulePresentation<F> minimal_presentation(const RealizationPtr<F>& m) {
    ModulePresentation<F> pres;
    pres.ring = m->ring();
    if (m->is_zero()) return pres;
    const auto& ring = *m->ring();
    const int lam = ring.dim();
    auto sd = syzygy_data(m);
    pres.gens = sd.cover_rank;
    if (sd.omega->is_zero()) return pres;
    auto relgens = sd.omega->minimal_generator_coords();
    for (int g : relgens) {
        // kernel coordinate g corresponds to an ambient row of kernel_rows
        std::vector<typename ArtinAlgebra<F>::RElem> row;
        for (int j = 0; j < pres.gens; ++j) {
            typename ArtinAlgebra<F>::RElem e(lam);
            for (int l = 0; l < lam; ++l) e[l] = sd.kernel_rows.at(g, (size_t)j * lam + l);
            row.push_back(std::move(e));
        }
        pres.relations.push_back(std::move(row));
    }
    return pres;
}

// R-submodule generated by the given vectors, realized with its own
// coordinates. Returns the realization and the echelon rows inside M.
template <class F>
std::pair<RealizationPtr<F>, Mat<F>>
submodule_generated(const RealizationPtr<F>& m,
                    const std::vector<std::vector<typename F::Elem>>& seeds) {
    const auto& f = m->field();
    Echelon<F> ech(f, m->dim());
    std::vector<std::vector<typename F::Elem>> queue;
    for (const auto& s : seeds)
        if (ech.insert(s)) queue.push_back(s);
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (int var = 0; var < m->nvars(); ++var) {
            auto w = mat_apply(f, m->action(var), v);
            if (ech.insert(w)) queue.push_back(std::move(w));
        }
    }
    const int d = ech.rank();
    Mat<F> rows(d, m->dim());
    for (int i = 0; i < d; ++i) rows.set_row(i, ech.basis_row(i));
    // coordinates in the submodule basis read off at the echelon pivots
    std::vector<Mat<F>> actions;
    for (int var = 0; var < m->nvars(); ++var) {
        Mat<F> A(d, d, f.zero());
        for (int c = 0; c < d; ++c) {
            auto w = mat_apply(f, m->action(var), rows.row(c));
            for (int r = 0; r < d; ++r) A.at(r, c) = w[ech.pivot(r)];
        }
        actions.push_back(std::move(A));
    }
    auto sub = std::make_shared<ModuleRealization<F>>(m->ring(), d, std::move(actions),
                                                      Mat<F>(d, 0));
    return {sub, rows};
}

// Quotient of M by the submodule spanned by the given rows (must be an
// R-submodule).
template <class F>
RealizationPtr<F> quotient_by(const RealizationPtr<F>& m, const Mat<F>& subrows) {
    const auto& f = m->field();
    Echelon<F> ech(f, m->dim());
    for (int r = 0; r < subrows.rows(); ++r) ech.insert(subrows.row(r));
    std::vector<char> is_piv(m->dim(), 0);
    for (int i = 0; i < ech.rank(); ++i) is_piv[ech.pivot(i)] = 1;
    std::vector<int> qc;
    for (int c = 0; c < m->dim(); ++c)
        if (!is_piv[c]) qc.push_back(c);
    const int d = (int)qc.size();
    auto project = [&](std::vector<typename F::Elem> v) {
        ech.reduce(v);
        std::vector<typename F::Elem> out(d);
        for (int i = 0; i < d; ++i) out[i] = v[qc[i]];
        return out;
    };
    std::vector<Mat<F>> actions;
    for (int var = 0; var < m->nvars(); ++var) {
        Mat<F> A(d, d, f.zero());
        for (int c = 0; c < d; ++c) {
            std::vector<typename F::Elem> e(m->dim(), f.zero());
            e[qc[c]] = f.one();
            auto col = project(mat_apply(f, m->action(var), e));
            for (int r = 0; r < d; ++r) A.at(r, c) = col[r];
        }
        actions.push_back(std::move(A));
    }
    Mat<F> gens(d, m->gen_coords().cols(), f.zero());
    for (int j = 0; j < m->gen_coords().cols(); ++j) {
        std::vector<typename F::Elem> g(m->dim());
        for (int r = 0; r < m->dim(); ++r) g[r] = m->gen_coords().at(r, j);
        auto col = project(std::move(g));
        for (int r = 0; r < d; ++r) gens.at(r, j) = col[r];
    }
    return std::make_shared<ModuleRealization<F>>(m->ring(), d, std::move(actions),
                                                  std::move(gens));
}

} // namespace homolog
