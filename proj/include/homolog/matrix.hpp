#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace homolog {

// Dense row-major matrix over a field F. Values are immutable in spirit:
// operations return fresh matrices.
template <class F>
class Mat {
public:
    using Elem = typename F::Elem;

    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, Elem fill = Elem{})
        : rows_(rows), cols_(cols), a_((size_t)rows * cols, fill) {}

    static Mat identity(const F& f, int n) {
        Mat m(n, n, f.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[(size_t)r * cols_ + c];
    }
    const Elem& at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[(size_t)r * cols_ + c];
    }

    Elem* row_ptr(int r) { return a_.data() + (size_t)r * cols_; }
    const Elem* row_ptr(int r) const { return a_.data() + (size_t)r * cols_; }

    std::vector<Elem> row(int r) const {
        return std::vector<Elem>(row_ptr(r), row_ptr(r) + cols_);
    }
    void set_row(int r, const std::vector<Elem>& v) {
        assert((int)v.size() == cols_);
        for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool equals(const F& f, const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!f.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    bool is_zero(const F& f) const {
        for (const auto& x : a_)
            if (!f.is_zero(x)) return false;
        return true;
    }

    std::string to_string(const F& f) const {
        std::string s;
        for (int r = 0; r < rows_; ++r) {
            s += "[";
            for (int c = 0; c < cols_; ++c) {
                if (c) s += " ";
                s += f.to_string(at(r, c));
            }
            s += "]\n";
        }
        return s;
    }

private:
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    assert(a.cols() == b.rows());
    Mat<F> c(a.rows(), b.cols(), f.zero());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const auto& aik = a.at(i, k);
            if (f.is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    }
    return c;
}

template <class F>
std::vector<typename F::Elem> mat_apply(const F& f, const Mat<F>& a,
                                        const std::vector<typename F::Elem>& x) {
    assert((int)x.size() == a.cols());
    std::vector<typename F::Elem> y(a.rows(), f.zero());
    for (int i = 0; i < a.rows(); ++i) {
        auto acc = f.zero();
        for (int j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a.at(i, j))) acc = f.add(acc, f.mul(a.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

template <class F>
Mat<F> mat_add(const F& f, const Mat<F>& a, const Mat<F>& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Mat<F> c(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c.at(r, j) = f.add(a.at(r, j), b.at(r, j));
    return c;
}

// Stack b below a.
template <class F>
Mat<F> mat_vstack(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    assert(a.cols() == b.cols());
    Mat<F> c(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c.at(r, j) = a.at(r, j);
    for (int r = 0; r < b.rows(); ++r)
        for (int j = 0; j < a.cols(); ++j) c.at(a.rows() + r, j) = b.at(r, j);
    return c;
}

} // namespace homolog
