#pragma once

#include <array>
#include <string>
#include <vector>

#include "homolog/resolution.hpp"

namespace homolog {

namespace detail {

// Realize a subquotient K / I of an ambient k-space with commuting actions.
// `kernel_rows` is a basis of K, `image_rows` spans I (inside K); the
// ambient action of each variable is given by `apply`.
template <class F, class Apply>
RealizationPtr<F> subquotient_realization(const AlgebraPtr<F>& ring, int ambient_dim,
                                          const Mat<F>& kernel_rows, const Mat<F>& image_rows,
                                          Apply&& apply) {
    const auto& f = ring->field();
    TransformEchelon<F> te(f, ambient_dim);
    Echelon<F> iech(f, ambient_dim);
    for (int r = 0; r < image_rows.rows(); ++r) iech.insert(image_rows.row(r));
    for (int i = 0; i < iech.rank(); ++i) te.insert(iech.basis_row(i));

    std::vector<int> rep_slot;                       // inserted index per rep
    std::vector<std::vector<typename F::Elem>> reps; // ambient representatives
    for (int r = 0; r < kernel_rows.rows(); ++r) {
        int before = te.inserted();
        if (te.insert(kernel_rows.row(r))) {
            rep_slot.push_back(before);
            reps.push_back(kernel_rows.row(r));
        }
    }
    const int dim = (int)reps.size();

    auto project = [&](const std::vector<typename F::Elem>& w) {
        auto c = te.coords(w);
        if (!c) throw HomologError("subquotient projection left the kernel");
        std::vector<typename F::Elem> out(dim);
        for (int i = 0; i < dim; ++i) out[i] = (*c)[rep_slot[i]];
        return out;
    };

    std::vector<Mat<F>> actions;
    for (int v = 0; v < ring->nvars(); ++v) {
        Mat<F> A(dim, dim, f.zero());
        for (int c = 0; c < dim; ++c) {
            auto col = project(apply(v, reps[c]));
            for (int r = 0; r < dim; ++r) A.at(r, c) = col[r];
        }
        actions.push_back(std::move(A));
    }
    return std::make_shared<ModuleRealization<F>>(ring, dim, std::move(actions), Mat<F>(dim, 0));
}

// rho_B(e) for a ring element given by coordinates.
template <class F>
Mat<F> elem_action(const ModuleRealization<F>& B, const typename ArtinAlgebra<F>::RElem& e) {
    const auto& f = B.field();
    Mat<F> out(B.dim(), B.dim(), f.zero());
    for (int l = 0; l < (int)e.size(); ++l) {
        if (f.is_zero(e[l])) continue;
        const Mat<F>& act = B.basis_action(l);
        for (int r = 0; r < B.dim(); ++r)
            for (int c = 0; c < B.dim(); ++c)
                out.at(r, c) = f.add(out.at(r, c), f.mul(e[l], act.at(r, c)));
    }
    return out;
}

} // namespace detail

struct PairSequence {
    std::string kind; // ext_mu, ext_len, tor_mu, tor_len
    InvariantSequence values;
    int ann_exponent = 0;
};

struct PairSequences {
    PairSequence ext_mu, ext_len, tor_mu, tor_len;
};

// Tor_i(M, N) realized from a resolution of the first argument.
template <class F>
RealizationPtr<F> tor_module(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int i);

// Ext^i(M, N) realized from a resolution of the first argument.
template <class F>
RealizationPtr<F> ext_module(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int i);

// lambda(Tor_i(A, B)) without realizing the module; resolves the cheaper side.
template <class F>
long long len_tor(const RealizationPtr<F>& a, const RealizationPtr<F>& b, int i);

template <class F>
long long len_ext(const RealizationPtr<F>& a, const RealizationPtr<F>& b, int i) {
    if (a->ring() != b->ring()) throw RingMismatchError("ext of modules over different rings");
    // Matlis duality at dimension zero: Ext^i(A,B)^dual = Tor_i(A, B^dual)
    return len_tor(a, matlis_dual(b), i);
}

template <class F>
PairSequences pair_sequences(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int depth);

template <class F>
std::vector<std::pair<long long, long long>>
ext_tor_duality_check(const RealizationPtr<F>& l, const RealizationPtr<F>& m, int depth);

// ---------------------------------------------------------------------------

template <class F>
RealizationPtr<F> tor_module(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int i) {
    if (m->ring() != n->ring()) throw RingMismatchError("tor of modules over different rings");
    const auto& ring = m->ring();
    const auto& f = ring->field();
    auto eng = get_resolution(m);
    eng->ensure_depth(i);
    const long long bi = eng->beta(i);
    const int lamB = n->dim();
    const long long dimC = bi * lamB; // C_i = N^{beta_i}, slot-major (j, t)
    if (dimC == 0 || n->is_zero()) return zero_module(ring);

    // kernel of d_i (x) 1
    Mat<F> K;
    if (i == 0) {
        K = Mat<F>::identity(f, (int)dimC);
    } else {
        const long long bprev = eng->beta(i - 1);
        Mat<F> D((int)(bprev * lamB), (int)dimC, f.zero());
        for (long long j = 0; j < bi; ++j) {
            auto col = eng->d_column(i, (int)j);
            for (long long r = 0; r < bprev; ++r) {
                auto blk = detail::elem_action(*n, col[r]);
                for (int t1 = 0; t1 < lamB; ++t1)
                    for (int t2 = 0; t2 < lamB; ++t2)
                        D.at((int)(r * lamB + t1), (int)(j * lamB + t2)) = blk.at(t1, t2);
            }
        }
        K = kernel_basis(f, D);
    }

    // image of d_{i+1} (x) 1 from the syzygy span: phi(s (x) e_t)
    auto srows = eng->syzygy_rows_unpacked(i);
    Mat<F> I((int)(srows.size() * lamB), (int)dimC, f.zero());
    int ir = 0;
    const int lamR = ring->dim();
    for (const auto& s : srows) {
        for (int t = 0; t < lamB; ++t) {
            for (long long j = 0; j < bi; ++j) {
                typename ArtinAlgebra<F>::RElem e(lamR);
                for (int l = 0; l < lamR; ++l) e[l] = s[(size_t)l * bi + j];
                auto blk = detail::elem_action(*n, e);
                for (int t1 = 0; t1 < lamB; ++t1)
                    I.at(ir, (int)(j * lamB + t1)) = blk.at(t1, t);
            }
            ++ir;
        }
    }

    auto apply = [&](int v, const std::vector<typename F::Elem>& w) {
        std::vector<typename F::Elem> out(dimC, f.zero());
        const Mat<F>& A = n->action(v);
        for (long long j = 0; j < bi; ++j)
            for (int t1 = 0; t1 < lamB; ++t1) {
                auto acc = f.zero();
                for (int t2 = 0; t2 < lamB; ++t2)
                    if (!f.is_zero(A.at(t1, t2)))
                        acc = f.add(acc, f.mul(A.at(t1, t2), w[(size_t)j * lamB + t2]));
                out[(size_t)j * lamB + t1] = acc;
            }
        return out;
    };
    return detail::subquotient_realization(ring, (int)dimC, K, I, apply);
}

template <class F>
RealizationPtr<F> ext_module(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int i) {
    if (m->ring() != n->ring()) throw RingMismatchError("ext of modules over different rings");
    const auto& ring = m->ring();
    const auto& f = ring->field();
    auto eng = get_resolution(m);
    eng->ensure_depth(i);
    const long long bi = eng->beta(i);
    const int lamB = n->dim();
    const long long dimD = bi * lamB; // Hom(F_i, N) = N^{beta_i}, slot-major (r, t)
    if (dimD == 0 || n->is_zero()) return zero_module(ring);
    const int lamR = ring->dim();

    // ker Hom(d_{i+1}, N) = maps killing S_{i+1}
    auto srows = eng->syzygy_rows_unpacked(i);
    Mat<F> C((int)(srows.size() * lamB), (int)dimD, f.zero());
    int cr = 0;
    for (const auto& s : srows) {
        std::vector<Mat<F>> blocks;
        for (long long r = 0; r < bi; ++r) {
            typename ArtinAlgebra<F>::RElem e(lamR);
            for (int l = 0; l < lamR; ++l) e[l] = s[(size_t)l * bi + r];
            blocks.push_back(detail::elem_action(*n, e));
        }
        for (int t1 = 0; t1 < lamB; ++t1) {
            for (long long r = 0; r < bi; ++r)
                for (int t2 = 0; t2 < lamB; ++t2)
                    C.at(cr, (int)(r * lamB + t2)) = blocks[r].at(t1, t2);
            ++cr;
        }
    }
    Mat<F> K = kernel_basis(f, C);

    // image of Hom(d_i, N)
    Mat<F> I(0, (int)dimD);
    if (i >= 1) {
        const long long bprev = eng->beta(i - 1);
        Mat<F> H((int)dimD, (int)(bprev * lamB), f.zero());
        for (long long c = 0; c < bi; ++c) {
            auto col = eng->d_column(i, (int)c);
            for (long long r = 0; r < bprev; ++r) {
                auto blk = detail::elem_action(*n, col[r]);
                for (int t1 = 0; t1 < lamB; ++t1)
                    for (int t2 = 0; t2 < lamB; ++t2)
                        H.at((int)(c * lamB + t1), (int)(r * lamB + t2)) = blk.at(t1, t2);
            }
        }
        I = H.transpose();
    }

    auto apply = [&](int v, const std::vector<typename F::Elem>& w) {
        std::vector<typename F::Elem> out(dimD, f.zero());
        const Mat<F>& A = n->action(v);
        for (long long j = 0; j < bi; ++j)
            for (int t1 = 0; t1 < lamB; ++t1) {
                auto acc = f.zero();
                for (int t2 = 0; t2 < lamB; ++t2)
                    if (!f.is_zero(A.at(t1, t2)))
                        acc = f.add(acc, f.mul(A.at(t1, t2), w[(size_t)j * lamB + t2]));
                out[(size_t)j * lamB + t1] = acc;
            }
        return out;
    };
    return detail::subquotient_realization(ring, (int)dimD, K, I, apply);
}

namespace detail {

template <class F>
bool is_residue_field(const RealizationPtr<F>& m) {
    if (m->dim() != 1) return false;
    for (int v = 0; v < m->nvars(); ++v)
        if (!m->field().is_zero(m->action(v).at(0, 0))) return false;
    return true;
}

// resolution cost proxy for choosing which side of Tor to resolve
template <class F>
long long resolve_cost_proxy(const RealizationPtr<F>& m, int depth) {
    auto eng = get_resolution(m);
    int d = std::min(depth, 3);
    long long total = 0;
    for (int j = 0; j <= d; ++j) total += eng->beta(j);
    return total * (m->dim() + 1);
}

} // namespace detail

template <class F>
long long len_tor(const RealizationPtr<F>& a, const RealizationPtr<F>& b, int i) {
    if (a->ring() != b->ring()) throw RingMismatchError("tor of modules over different rings");
    if (a->is_zero() || b->is_zero()) return 0;
    if (detail::is_residue_field(b)) return get_resolution(a)->beta(i);
    if (detail::is_residue_field(a)) return get_resolution(b)->beta(i);
    RealizationPtr<F> x = a, y = b;
    if (detail::resolve_cost_proxy(b, i) < detail::resolve_cost_proxy(a, i)) std::swap(x, y);
    auto eng = get_resolution(x);
    eng->ensure_depth(i);
    long long total = eng->beta(i) * y->dim();
    long long r1 = eng->rank_d_tensor(i, *y);
    long long r2 = eng->rank_im_span(i, *y);
    return total - r1 - r2;
}

template <class F>
PairSequences pair_sequences(const RealizationPtr<F>& m, const RealizationPtr<F>& n, int depth) {
    PairSequences out;
    out.ext_mu.kind = "ext_mu";
    out.ext_len.kind = "ext_len";
    out.tor_mu.kind = "tor_mu";
    out.tor_len.kind = "tor_len";
    int ann = 0;
    for (int i = 0; i <= depth; ++i) {
        auto t = tor_module(m, n, i);
        auto e = ext_module(m, n, i);
        auto ti = module_invariants(*t);
        auto ei = module_invariants(*e);
        out.tor_mu.values.values.push_back(ti.mu);
        out.tor_len.values.values.push_back(ti.length);
        out.ext_mu.values.values.push_back(ei.mu);
        out.ext_len.values.values.push_back(ei.length);
        ann = std::max(ann, std::max(loewy_length(*t), loewy_length(*e)));
    }
    out.ext_mu.ann_exponent = out.ext_len.ann_exponent = ann;
    out.tor_mu.ann_exponent = out.tor_len.ann_exponent = ann;
    out.ext_mu.values.label = "ext_mu";
    out.ext_len.values.label = "ext_len";
    out.tor_mu.values.label = "tor_mu";
    out.tor_len.values.label = "tor_len";
    return out;
}

// dim Ext^i(L, M-dual) vs dim Tor_i(L, M) for i = 1..depth, computed along
// different paths (realized Hom complex vs length formula).
template <class F>
std::vector<std::pair<long long, long long>>
ext_tor_duality_check(const RealizationPtr<F>& l, const RealizationPtr<F>& m, int depth) {
    std::vector<std::pair<long long, long long>> out;
    auto md = matlis_dual(m);
    for (int i = 1; i <= depth; ++i) {
        long long lhs = ext_module(l, md, i)->dim();
        long long rhs = len_tor(l, m, i);
        out.push_back({lhs, rhs});
    }
    return out;
}

} // namespace homolog
