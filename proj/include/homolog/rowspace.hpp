#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "homolog/field.hpp"
#include "homolog/matrix.hpp"

namespace homolog {

// Row storage for the resolution pipeline. Rows live in an "ambient" space
// shaped (lambda segments) x (nslots entries per segment): the coordinate of
// (segment l, slot j) has logical column index l*nslots + j. Free modules
// R^beta use lambda = dim R and nslots = beta, so ring-element actions become
// segment recombinations.

// Generic dense backend (rationals, odd-characteristic GF).
template <class F>
class DenseRows {
public:
    using Elem = typename F::Elem;

    DenseRows(const F& f, int lambda, int nslots)
        : f_(&f), lambda_(lambda), nslots_(nslots) {}

    int lambda() const { return lambda_; }
    int nslots() const { return nslots_; }
    long long width() const { return (long long)lambda_ * nslots_; }
    size_t rows() const { return rows_.size(); }
    void reserve(size_t n) { rows_.reserve(n); }
    void clear() { rows_.clear(); }

    size_t append_zero() {
        rows_.emplace_back(width(), f_->zero());
        return rows_.size() - 1;
    }
    size_t append_copy(const DenseRows& src, size_t r) {
        rows_.push_back(src.rows_[r]);
        return rows_.size() - 1;
    }
    void pop_back() { rows_.pop_back(); }

    void set(size_t r, int l, int j, const Elem& v) { rows_[r][(size_t)l * nslots_ + j] = v; }
    Elem get(size_t r, int l, int j) const { return rows_[r][(size_t)l * nslots_ + j]; }
    void set_col(size_t r, long long c, const Elem& v) { rows_[r][c] = v; }
    Elem get_col(size_t r, long long c) const { return rows_[r][c]; }

    long long lead(size_t r, long long from = 0) const {
        const auto& row = rows_[r];
        for (long long c = from; c < (long long)row.size(); ++c)
            if (!f_->is_zero(row[c])) return c;
        return -1;
    }

    void normalize(size_t r, long long c) {
        auto s = f_->inv(rows_[r][c]);
        for (auto& x : rows_[r])
            if (!f_->is_zero(x)) x = f_->mul(x, s);
    }

    // dst -= dst[c] * src, src normalized at c
    void axpy_elim_from(size_t dst, const DenseRows& srcpool, size_t src, long long c) {
        auto t = rows_[dst][c];
        if (f_->is_zero(t)) return;
        const auto& s = srcpool.rows_[src];
        auto& d = rows_[dst];
        for (size_t i = 0; i < d.size(); ++i)
            if (!f_->is_zero(s[i])) d[i] = f_->sub(d[i], f_->mul(t, s[i]));
    }

    void swap_rows(size_t a, size_t b) { std::swap(rows_[a], rows_[b]); }

    bool row_is_zero(size_t r) const {
        for (const auto& x : rows_[r])
            if (!f_->is_zero(x)) return false;
        return true;
    }

    // Append C applied segment-wise: out_seg[a] = sum_b C[a][b] * src_seg[b].
    // The output shape is (C.rows(), src.nslots), which must match *this.
    size_t append_seg_combine(const DenseRows& src, size_t r, const Mat<F>& C) {
        size_t out = append_zero();
        auto& o = rows_[out];
        const auto& s = src.rows_[r];
        for (int a = 0; a < C.rows(); ++a)
            for (int b = 0; b < C.cols(); ++b) {
                const auto& c = C.at(a, b);
                if (f_->is_zero(c)) continue;
                const size_t so = (size_t)b * nslots_, oo = (size_t)a * nslots_;
                for (int j = 0; j < nslots_; ++j)
                    if (!f_->is_zero(s[so + j]))
                        o[oo + j] = f_->add(o[oo + j], f_->mul(c, s[so + j]));
            }
        return out;
    }

    // dst += c * src
    void add_scaled(size_t dst, const DenseRows& srcpool, size_t src, const Elem& c) {
        if (f_->is_zero(c)) return;
        const auto& s = srcpool.rows_[src];
        auto& d = rows_[dst];
        for (size_t i = 0; i < d.size(); ++i)
            if (!f_->is_zero(s[i])) d[i] = f_->add(d[i], f_->mul(c, s[i]));
    }

    // Target shape must be (src.nslots-wise transposed): out(row=c) over cols r.
    DenseRows transposed(int out_lambda, int out_nslots) const {
        DenseRows t(*f_, out_lambda, out_nslots);
        t.reserve(width());
        for (long long c = 0; c < width(); ++c) t.append_zero();
        for (size_t r = 0; r < rows_.size(); ++r)
            for (long long c = 0; c < width(); ++c)
                if (!f_->is_zero(rows_[r][c])) t.rows_[c][r] = rows_[r][c];
        return t;
    }

private:
    const F* f_;
    int lambda_, nslots_;
    std::vector<std::vector<Elem>> rows_;
};

// Bit-packed GF(2) backend. Segments are padded to whole 64-bit words; the
// padding bits stay zero through every operation.
class PackedRows {
public:
    using Elem = uint32_t;

    PackedRows(const GF&, int lambda, int nslots)
        : lambda_(lambda), nslots_(nslots), segw_((nslots + 63) / 64),
          wpr_((size_t)lambda * segw_) {}

    int lambda() const { return lambda_; }
    int nslots() const { return nslots_; }
    long long width() const { return (long long)lambda_ * nslots_; }
    size_t rows() const { return nrows_; }
    void reserve(size_t n) { data_.reserve(n * wpr_); }
    void clear() {
        data_.clear();
        nrows_ = 0;
    }

    size_t append_zero() {
        data_.resize(data_.size() + wpr_, 0);
        return nrows_++;
    }
    size_t append_copy(const PackedRows& src, size_t r) {
        size_t out = append_zero();
        std::copy(src.row(r), src.row(r) + wpr_, row(out));
        return out;
    }
    void pop_back() {
        data_.resize(data_.size() - wpr_);
        --nrows_;
    }

    void set(size_t r, int l, int j, Elem v) {
        uint64_t* w = row(r) + (size_t)l * segw_ + j / 64;
        uint64_t m = 1ull << (j % 64);
        if (v & 1)
            *w |= m;
        else
            *w &= ~m;
    }
    Elem get(size_t r, int l, int j) const {
        return (row(r)[(size_t)l * segw_ + j / 64] >> (j % 64)) & 1;
    }
    void set_col(size_t r, long long c, Elem v) { set(r, (int)(c / nslots_), (int)(c % nslots_), v); }
    Elem get_col(size_t r, long long c) const { return get(r, (int)(c / nslots_), (int)(c % nslots_)); }

    long long lead(size_t r, long long from = 0) const {
        int l0 = (int)(from / nslots_), j0 = (int)(from % nslots_);
        const uint64_t* p = row(r);
        for (int l = l0; l < lambda_; ++l) {
            int wstart = (l == l0) ? j0 / 64 : 0;
            for (int w = wstart; w < segw_; ++w) {
                uint64_t x = p[(size_t)l * segw_ + w];
                if (l == l0 && w == j0 / 64 && (j0 % 64)) x &= ~0ull << (j0 % 64);
                if (x) {
                    int j = w * 64 + std::countr_zero(x);
                    return (long long)l * nslots_ + j;
                }
            }
        }
        return -1;
    }

    void normalize(size_t, long long) {}

    void axpy_elim_from(size_t dst, const PackedRows& srcpool, size_t src, long long c) {
        if (!get_col(dst, c)) return;
        uint64_t* d = row(dst);
        const uint64_t* s = srcpool.row(src);
        for (size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        uint64_t *pa = row(a), *pb = row(b);
        for (size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
    }

    bool row_is_zero(size_t r) const {
        const uint64_t* p = row(r);
        for (size_t i = 0; i < wpr_; ++i)
            if (p[i]) return false;
        return true;
    }

    size_t append_seg_combine(const PackedRows& src, size_t r, const Mat<GF>& C) {
        size_t out = append_zero();
        uint64_t* o = data_.data() + out * wpr_;
        const uint64_t* s = src.row(r);
        for (int a = 0; a < C.rows(); ++a)
            for (int b = 0; b < C.cols(); ++b) {
                if (!(C.at(a, b) & 1)) continue;
                uint64_t* oa = o + (size_t)a * segw_;
                const uint64_t* sb = s + (size_t)b * segw_;
                for (int w = 0; w < segw_; ++w) oa[w] ^= sb[w];
            }
        return out;
    }

    void add_scaled(size_t dst, const PackedRows& srcpool, size_t src, Elem c) {
        if (!(c & 1)) return;
        uint64_t* d = row(dst);
        const uint64_t* s = srcpool.row(src);
        for (size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }

    PackedRows transposed(int out_lambda, int out_nslots) const {
        GF f2(2);
        PackedRows t(f2, out_lambda, out_nslots);
        t.reserve(width());
        for (long long c = 0; c < width(); ++c) t.append_zero();
        for (size_t r = 0; r < nrows_; ++r) {
            const uint64_t* p = row(r);
            for (int l = 0; l < lambda_; ++l)
                for (int w = 0; w < segw_; ++w) {
                    uint64_t x = p[(size_t)l * segw_ + w];
                    while (x) {
                        int j = w * 64 + std::countr_zero(x);
                        x &= x - 1;
                        t.set_col((size_t)l * nslots_ + j, (long long)r, 1);
                    }
                }
        }
        return t;
    }

private:
    uint64_t* row(size_t r) { return data_.data() + r * wpr_; }
    const uint64_t* row(size_t r) const { return data_.data() + r * wpr_; }

    int lambda_, nslots_, segw_;
    size_t wpr_;
    size_t nrows_ = 0;
    std::vector<uint64_t> data_;
};

// Streaming echelon over a Rows backend: rows kept forward-reduced with
// strictly increasing leading columns.
template <class F, class Rows>
class StreamEchelon {
public:
    StreamEchelon(const F& f, int lambda, int nslots)
        : basis_(f, lambda, nslots) {}

    int rank() const { return (int)order_.size(); }
    const Rows& basis() const { return basis_; }
    long long lead_of(int i) const { return leads_[order_[i]]; }
    size_t row_of(int i) const { return order_[i]; }

    // Reduce the row in place against the basis.
    void reduce(Rows& pool, size_t r) const {
        for (size_t i = 0; i < order_.size(); ++i)
            pool.axpy_elim_from(r, basis_, order_[i], leads_[order_[i]]);
    }

    // Reduce, and absorb the remainder when independent. Returns true if the
    // rank grew. The pool row is consumed (left reduced).
    bool insert(Rows& pool, size_t r) {
        reduce(pool, r);
        long long lc = pool.lead(r);
        if (lc < 0) return false;
        pool.normalize(r, lc);
        size_t idx = basis_.append_copy(pool, r);
        leads_.push_back(lc);
        size_t pos = 0;
        while (pos < order_.size() && leads_[order_[pos]] < lc) ++pos;
        order_.insert(order_.begin() + pos, idx);
        return true;
    }

private:
    Rows basis_;
    std::vector<long long> leads_;
    std::vector<size_t> order_; // basis row indices sorted by lead
};

// In-place reduced row echelon form; returns pivot columns in order.
// Deterministic: smallest remaining column first, first row attaining it.
template <class Rows>
std::vector<long long> rref_rows(Rows& m) {
    const size_t n = m.rows();
    std::vector<long long> leads(n);
    for (size_t i = 0; i < n; ++i) leads[i] = m.lead(i);
    std::vector<long long> pivots;
    for (size_t r = 0; r < n; ++r) {
        // find minimal lead among rows >= r, first row wins ties
        size_t best = r;
        for (size_t i = r; i < n; ++i) {
            if (leads[i] < 0) continue;
            if (leads[best] < 0 || leads[i] < leads[best]) best = i;
        }
        if (leads[best] < 0) break;
        if (best != r) {
            m.swap_rows(best, r);
            std::swap(leads[best], leads[r]);
        }
        long long c = leads[r];
        m.normalize(r, c);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            m.axpy_elim_from(i, m, r, c);
            if (i > r) leads[i] = m.lead(i, c);
        }
        pivots.push_back(c);
    }
    return pivots;
}

template <class F, class Rows>
struct KernelResult {
    long long rank = 0;
    Rows kernel;
    KernelResult(const F& f, int lambda, int nslots) : kernel(f, lambda, nslots) {}
};

// Right kernel of the equation rows, in the standard form given by the rref
// free columns (ascending). The equations matrix is consumed.
template <class F, class Rows>
KernelResult<F, Rows> kernel_of_rows(const F& f, Rows& eqs, int dom_lambda, int dom_nslots) {
    auto pivots = rref_rows(eqs);
    KernelResult<F, Rows> out(f, dom_lambda, dom_nslots);
    out.rank = (long long)pivots.size();
    const long long w = (long long)dom_lambda * dom_nslots;
    std::vector<char> is_piv(w, 0);
    for (long long c : pivots) is_piv[c] = 1;
    out.kernel.reserve(w - out.rank);
    for (long long c = 0; c < w; ++c) {
        if (is_piv[c]) continue;
        size_t kr = out.kernel.append_zero();
        out.kernel.set_col(kr, c, f.one());
        for (size_t i = 0; i < pivots.size(); ++i) {
            auto v = eqs.get_col(i, c);
            if (!f.is_zero(v)) out.kernel.set_col(kr, pivots[i], f.neg(v));
        }
    }
    return out;
}

} // namespace homolog
