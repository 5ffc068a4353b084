#pragma once

#include <optional>
#include <vector>

#include "homolog/matrix.hpp"

namespace homolog {

template <class F>
struct RrefResult {
    Mat<F> m;
    std::vector<int> pivots; // pivot column per pivot row
    int rank = 0;
};

// Reduced row echelon form. Pivot selection is deterministic: leftmost
// column, first row (top to bottom) with a nonzero entry. Pivots are
// normalized to 1 and their columns fully cleared.
template <class F>
RrefResult<F> rref(const F& f, Mat<F> m) {
    RrefResult<F> out;
    int r = 0;
    const int rows = m.rows(), cols = m.cols();
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto s = f.inv(m.at(r, c));
        for (int j = c; j < cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto t = m.at(i, c);
            for (int j = c; j < cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

template <class F>
int rank(const F& f, const Mat<F>& m) {
    return rref(f, m).rank;
}

// Basis of the right null space {x : m x = 0}, one basis vector per row.
// Row count is cols(m) - rank(m). Basis vectors are in the standard form
// induced by the rref free columns, in increasing free-column order.
template <class F>
Mat<F> kernel_basis(const F& f, const Mat<F>& m) {
    auto rr = rref(f, m);
    const int cols = m.cols();
    std::vector<char> is_piv(cols, 0);
    for (int c : rr.pivots) is_piv[c] = 1;
    Mat<F> k(cols - rr.rank, cols, f.zero());
    int kr = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        k.at(kr, c) = f.one();
        for (int i = 0; i < rr.rank; ++i)
            k.at(kr, rr.pivots[i]) = f.neg(rr.m.at(i, c));
        ++kr;
    }
    return k;
}

// Some x with a x = b, or nullopt if the system is inconsistent. Free
// variables are set to zero, so the witness is deterministic.
template <class F>
std::optional<std::vector<typename F::Elem>>
solve(const F& f, const Mat<F>& a, const std::vector<typename F::Elem>& b) {
    assert((int)b.size() == a.rows());
    Mat<F> aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto rr = rref(f, aug);
    for (int c : rr.pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<typename F::Elem> x(a.cols(), f.zero());
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.m.at(i, a.cols());
    return x;
}

// Incremental echelon basis of a row span. Rows are kept fully reduced
// (rref invariant), so membership tests are a single reduction pass.
template <class F>
class Echelon {
public:
    using Elem = typename F::Elem;

    explicit Echelon(const F& f, int width) : f_(&f), width_(width) {}

    int width() const { return width_; }
    int rank() const { return (int)rows_.size(); }
    const std::vector<Elem>& basis_row(int i) const { return rows_[i]; }
    int pivot(int i) const { return pivots_[i]; }

    // Reduce v against the basis in place; returns the first nonzero column
    // of the remainder, or -1 if v reduced to zero.
    int reduce(std::vector<Elem>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (f_->is_zero(c)) continue;
            auto t = c;
            const auto& row = rows_[i];
            for (int j = pivots_[i]; j < width_; ++j)
                if (!f_->is_zero(row[j])) v[j] = f_->sub(v[j], f_->mul(t, row[j]));
        }
        for (int j = 0; j < width_; ++j)
            if (!f_->is_zero(v[j])) return j;
        return -1;
    }

    bool contains(std::vector<Elem> v) const { return reduce(v) < 0; }

    // Insert v's residue if independent; returns true when the rank grew.
    bool insert(std::vector<Elem> v) {
        int p = reduce(v);
        if (p < 0) return false;
        auto s = f_->inv(v[p]);
        for (int j = p; j < width_; ++j) v[j] = f_->mul(s, v[j]);
        // back-eliminate column p from existing rows
        for (size_t i = 0; i < rows_.size(); ++i) {
            auto& row = rows_[i];
            if (f_->is_zero(row[p])) continue;
            auto t = row[p];
            for (int j = p; j < width_; ++j)
                if (!f_->is_zero(v[j])) row[j] = f_->sub(row[j], f_->mul(t, v[j]));
        }
        // keep rows ordered by pivot column
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    const F* f_;
    int width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivots_;
};

// Echelon span that remembers how each reduced row combines the inserted
// originals, so vectors in the span can be expressed in terms of the
// original insertion order. Used for subquotient coordinates.
template <class F>
class TransformEchelon {
public:
    using Elem = typename F::Elem;

    explicit TransformEchelon(const F& f, int width) : f_(&f), width_(width) {}

    int rank() const { return (int)rows_.size(); }
    int inserted() const { return n_inserted_; }

    // Insert a vector (counted even if dependent). Returns true if the rank grew.
    bool insert(std::vector<Elem> v) {
        std::vector<Elem> u(n_inserted_ + 1, f_->zero());
        u[n_inserted_] = f_->one();
        ++n_inserted_;
        for (auto& t : transforms_) t.resize(n_inserted_, f_->zero());
        int p = reduce_tracked(v, u);
        if (p < 0) return false;
        auto s = f_->inv(v[p]);
        for (int j = p; j < width_; ++j) v[j] = f_->mul(s, v[j]);
        for (auto& x : u) x = f_->mul(s, x);
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        transforms_.push_back(std::move(u));
        return true;
    }

    // If w lies in the span, return coefficients over the inserted vectors
    // (dependent insertions get coefficient from the tracked combination).
    std::optional<std::vector<Elem>> coords(std::vector<Elem> w) const {
        std::vector<Elem> u(n_inserted_, f_->zero());
        std::vector<Elem> coeff(rows_.size(), f_->zero());
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = w[pivots_[i]];
            if (f_->is_zero(c)) continue;
            auto t = c;
            coeff[i] = t;
            const auto& row = rows_[i];
            for (int j = 0; j < width_; ++j)
                if (!f_->is_zero(row[j])) w[j] = f_->sub(w[j], f_->mul(t, row[j]));
        }
        for (int j = 0; j < width_; ++j)
            if (!f_->is_zero(w[j])) return std::nullopt;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (f_->is_zero(coeff[i])) continue;
            const auto& tr = transforms_[i];
            for (int j = 0; j < (int)tr.size(); ++j)
                if (!f_->is_zero(tr[j])) u[j] = f_->add(u[j], f_->mul(coeff[i], tr[j]));
        }
        return u;
    }

private:
    int reduce_tracked(std::vector<Elem>& v, std::vector<Elem>& u) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (f_->is_zero(c)) continue;
            auto t = c;
            const auto& row = rows_[i];
            for (int j = 0; j < width_; ++j)
                if (!f_->is_zero(row[j])) v[j] = f_->sub(v[j], f_->mul(t, row[j]));
            const auto& tr = transforms_[i];
            for (int j = 0; j < (int)tr.size(); ++j)
                if (!f_->is_zero(tr[j])) u[j] = f_->sub(u[j], f_->mul(t, tr[j]));
        }
        for (int j = 0; j < width_; ++j)
            if (!f_->is_zero(v[j])) return j;
        return -1;
    }

    const F* f_;
    int width_;
    int n_inserted_ = 0;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivots_;
    std::vector<std::vector<Elem>> transforms_;
};

} // namespace homolog
