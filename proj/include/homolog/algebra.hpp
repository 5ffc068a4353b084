#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "homolog/groebner.hpp"
#include "homolog/linalg.hpp"
#include "homolog/matrix.hpp"

namespace homolog {

struct RingInvariants {
    long long length = 0;
    long long embdim = 0;
    long long type = 0;
    long long mult = 0;
    bool is_min_mult = false;
};

// The Artinian local ring R = k[x_1..x_n]/I as a finite-dimensional algebra:
// standard-monomial basis (index 0 is the monomial 1), per-variable action
// matrices, full basis multiplication table, and the Loewy length.
template <class F>
class ArtinAlgebra {
public:
    using Elem = typename F::Elem;
    using RElem = std::vector<Elem>; // coordinates over the standard basis

    ArtinAlgebra(F field, std::vector<std::string> vars, GroebnerBasis<F> gb)
        : field_(std::move(field)), vars_(std::move(vars)), gb_(std::move(gb)) {
        basis_ = standard_monomials(gb_);
        dim_ = (int)basis_.size();
        for (int i = 0; i < dim_; ++i) basis_index_[key(basis_[i])] = i;

        var_action_.reserve(vars_.size());
        for (size_t v = 0; v < vars_.size(); ++v) {
            Monomial xv((int)vars_.size());
            xv.e[v] = 1;
            Mat<F> m(dim_, dim_, field_.zero());
            for (int j = 0; j < dim_; ++j) {
                auto col = nf_coords(mon_mul(xv, basis_[j]));
                for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
            }
            var_action_.push_back(std::move(m));
        }

        basis_action_.reserve(dim_);
        for (int j = 0; j < dim_; ++j) {
            Mat<F> m(dim_, dim_, field_.zero());
            for (int l = 0; l < dim_; ++l) {
                auto col = nf_coords(mon_mul(basis_[j], basis_[l]));
                for (int i = 0; i < dim_; ++i) m.at(i, l) = col[i];
            }
            basis_action_.push_back(std::move(m));
        }

        compute_filtration();
    }

    const F& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return (int)vars_.size(); }
    const GroebnerBasis<F>& gb() const { return gb_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int dim() const { return dim_; }
    int loewy() const { return loewy_; }

    // lambda x lambda action of variable v on R (columns are x_v * b_j).
    const Mat<F>& var_action(int v) const { return var_action_[v]; }
    // action of basis monomial j on R.
    const Mat<F>& basis_action(int j) const { return basis_action_[j]; }

    // For basis monomial l >= 1: a variable v and basis index p with
    // b_l = x_v * b_p. Standard monomials are closed under division, so the
    // parent is always in the basis, at a smaller index.
    std::pair<int, int> staircase_parent(int l) const {
        const Monomial& m = basis_[l];
        int v = 0;
        while (m.e[v] == 0) ++v;
        Monomial parent = m;
        parent.e[v] -= 1;
        return {v, basis_index_.at(parent.e)};
    }

    RElem one() const {
        RElem u(dim_, field_.zero());
        u[0] = field_.one();
        return u;
    }
    RElem zero_elem() const { return RElem(dim_, field_.zero()); }

    RElem from_poly(const Poly<F>& p) const {
        return coords(normal_form(field_, p, gb_));
    }

    RElem multiply(const RElem& a, const RElem& b) const {
        RElem r(dim_, field_.zero());
        for (int j = 0; j < dim_; ++j) {
            if (field_.is_zero(b[j])) continue;
            const Mat<F>& act = basis_action_[j];
            for (int i = 0; i < dim_; ++i) {
                auto acc = field_.zero();
                for (int l = 0; l < dim_; ++l)
                    if (!field_.is_zero(act.at(i, l)))
                        acc = field_.add(acc, field_.mul(act.at(i, l), a[l]));
                r[i] = field_.add(r[i], field_.mul(acc, b[j]));
            }
        }
        return r;
    }

    // A k-basis of m^j as a subspace of R, one coordinate vector per row.
    // j = 0 gives all of R.
    Mat<F> m_power_basis(int j) const {
        if (j >= (int)power_basis_.size()) return Mat<F>(0, dim_);
        return power_basis_[j];
    }
    long long m_power_dim(int j) const {
        if (j >= (int)power_basis_.size()) return 0;
        return power_basis_[j].rows();
    }

    RingInvariants ring_invariants() const {
        RingInvariants inv;
        inv.length = dim_;
        inv.mult = dim_;
        inv.embdim = m_power_dim(1) - m_power_dim(2);
        // socle = simultaneous kernel of all variable actions
        Mat<F> stack(0, dim_);
        for (const auto& a : var_action_) stack = mat_vstack(stack, a);
        inv.type = dim_ - rank(field_, stack);
        inv.is_min_mult = m_power_dim(2) == 0;
        return inv;
    }

    std::string basis_to_string() const {
        std::string s;
        for (const auto& m : basis_) {
            if (!s.empty()) s += " ";
            s += mon_to_string(m, vars_);
        }
        return s;
    }

private:
    static std::vector<uint32_t> key(const Monomial& m) { return m.e; }

    std::vector<Elem> coords(const Poly<F>& p) const {
        std::vector<Elem> c(dim_, field_.zero());
        for (const auto& t : p.terms) {
            auto it = basis_index_.find(key(t.m));
            if (it == basis_index_.end())
                throw HomologError("normal form escaped the standard basis");
            c[it->second] = t.c;
        }
        return c;
    }

    std::vector<Elem> nf_coords(const Monomial& m) const {
        Poly<F> p = poly_term<F>(field_, m, field_.one());
        return coords(normal_form(field_, p, gb_));
    }

    void compute_filtration() {
        power_basis_.push_back(Mat<F>::identity(field_, dim_));
        while (true) {
            const Mat<F>& prev = power_basis_.back();
            if (prev.rows() == 0) break;
            Echelon<F> ech(field_, dim_);
            for (size_t v = 0; v < vars_.size(); ++v)
                for (int r = 0; r < prev.rows(); ++r)
                    ech.insert(mat_apply(field_, var_action_[v], prev.row(r)));
            Mat<F> next(ech.rank(), dim_);
            for (int i = 0; i < ech.rank(); ++i) next.set_row(i, ech.basis_row(i));
            if (next.rows() == prev.rows())
                throw HomologError("maximal ideal is not nilpotent"); // cannot happen after staircase check
            power_basis_.push_back(std::move(next));
            if (power_basis_.back().rows() == 0) break;
        }
        loewy_ = (int)power_basis_.size() - 1;
    }

    F field_;
    std::vector<std::string> vars_;
    GroebnerBasis<F> gb_;
    std::vector<Monomial> basis_;
    std::map<std::vector<uint32_t>, int> basis_index_;
    int dim_ = 0;
    int loewy_ = 0;
    std::vector<Mat<F>> var_action_;
    std::vector<Mat<F>> basis_action_;
    std::vector<Mat<F>> power_basis_; // power_basis_[j] spans m^j
};

template <class F>
using AlgebraPtr = std::shared_ptr<const ArtinAlgebra<F>>;

// Parse the ideal generators, run Buchberger, and assemble the algebra.
// Propagates ConstantTermError / NotMPrimaryError / parse errors.
template <class F>
AlgebraPtr<F> build_algebra(const F& field, const std::vector<std::string>& vars,
                            const std::vector<std::string>& ideal_gens,
                            uint64_t degree_cap = 64) {
    std::vector<Poly<F>> gens;
    gens.reserve(ideal_gens.size());
    for (const auto& s : ideal_gens) gens.push_back(parse_poly(field, s, vars));
    auto gb = buchberger(field, std::move(gens), (int)vars.size(), degree_cap);
    return std::make_shared<const ArtinAlgebra<F>>(field, vars, std::move(gb));
}

} // namespace homolog
