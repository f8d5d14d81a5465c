#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liepois/lie_algebra.hpp"

namespace liepois {

using Tensor3 = std::vector<Matrix>;  // T[i][j][k] e_i ⊗ e_j ⊗ e_k

inline Tensor3 zero_tensor3(unsigned dim) { return Tensor3(dim, zero_matrix(dim)); }

inline bool is_zero_tensor3(const Tensor3& t) {
    for (const auto& m : t)
        for (const auto& row : m)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
    return true;
}

// CYB(r) = [r^{12},r^{13}] + [r^{12},r^{23}] + [r^{13},r^{23}]  in g⊗g⊗g
inline Tensor3 cyb(const LieAlgebra& g, const Matrix& r) {
    const unsigned n = g.dim();
    Tensor3 out = zero_tensor3(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (r[i][j].is_zero()) continue;
            for (unsigned k = 0; k < n; ++k)
                for (unsigned l = 0; l < n; ++l) {
                    if (r[k][l].is_zero()) continue;
                    Rational c = r[i][j] * r[k][l];
                    Vec b12 = g.bracket_basis(i, k);  // [r12,r13]: bracket first legs
                    for (unsigned m = 0; m < n; ++m)
                        if (!b12[m].is_zero()) out[m][j][l] += c * b12[m];
                    Vec b23 = g.bracket_basis(j, k);  // [r12,r23]: second vs first leg
                    for (unsigned m = 0; m < n; ++m)
                        if (!b23[m].is_zero()) out[i][m][l] += c * b23[m];
                    Vec b33 = g.bracket_basis(j, l);  // [r13,r23]: both second legs
                    for (unsigned m = 0; m < n; ++m)
                        if (!b33[m].is_zero()) out[i][k][m] += c * b33[m];
                }
        }
    return out;
}

// delta(x) = [x⊗1 + 1⊗x, r]
inline Matrix cobracket(const LieAlgebra& g, const Matrix& r, const Vec& x) {
    const unsigned n = g.dim();
    Matrix out = zero_matrix(n);
    for (unsigned a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                if (r[i][j].is_zero()) continue;
                Vec bi = g.bracket_basis(a, i);
                for (unsigned m = 0; m < n; ++m)
                    if (!bi[m].is_zero()) out[m][j] += x[a] * r[i][j] * bi[m];
                Vec bj = g.bracket_basis(a, j);
                for (unsigned m = 0; m < n; ++m)
                    if (!bj[m].is_zero()) out[i][m] += x[a] * r[i][j] * bj[m];
            }
    }
    return out;
}

// Quasitriangular structure: r, its symmetric part t (invariant), antisymmetric
// part r0, the maps L, R : g* -> g and the dual Lie bracket. t_inverse is
// present iff t is nondegenerate (factorizable case), detected by exact
// Gaussian elimination at load.
class Quasitriangular {
public:
    struct Report {
        bool ok = true;
        std::string message;
    };

    Quasitriangular(const LieAlgebra& g, Matrix r) : g_(&g), r_(std::move(r)) {
        const unsigned n = g.dim();
        r0_ = zero_matrix(n);
        t_ = zero_matrix(n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                r0_[i][j] = (r_[i][j] - r_[j][i]) / Rational(2);
                t_[i][j] = r_[i][j] + r_[j][i];
            }
        Matrix inv;
        if (invert_matrix(t_, inv)) t_inverse_ = std::move(inv);
    }

    const LieAlgebra& algebra() const { return *g_; }
    const Matrix& r() const { return r_; }
    const Matrix& r0() const { return r0_; }
    const Matrix& t() const { return t_; }
    bool factorizable() const { return t_inverse_.has_value(); }
    const Matrix& t_inverse() const {
        if (!t_inverse_) throw NotFactorizable("t is degenerate: no inverse");
        return *t_inverse_;
    }

    // L(λ) = (λ⊗id)(r), R(λ) = -(λ⊗id)(r^{2,1});  L - R = contraction with t
    Vec L_map(const Vec& lam) const {
        const unsigned n = g_->dim();
        Vec out = zero_vec(n);
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i)
                if (!r_[i][j].is_zero() && !lam[i].is_zero()) out[j] += lam[i] * r_[i][j];
        return out;
    }
    Vec R_map(const Vec& lam) const {
        const unsigned n = g_->dim();
        Vec out = zero_vec(n);
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i)
                if (!r_[j][i].is_zero() && !lam[i].is_zero()) out[j] -= lam[i] * r_[j][i];
        return out;
    }
    // λ∨ = (λ⊗id)(t)
    Vec t_pair(const Vec& lam) const {
        const unsigned n = g_->dim();
        Vec out = zero_vec(n);
        for (unsigned j = 0; j < n; ++j)
            for (unsigned i = 0; i < n; ++i)
                if (!t_[i][j].is_zero() && !lam[i].is_zero()) out[j] += lam[i] * t_[i][j];
        return out;
    }

    // ⟨[ξ,η]_{g*}, x⟩ = ⟨ξ⊗η, δ(x)⟩ — transpose of the cobracket
    Vec dual_bracket(const Vec& xi, const Vec& eta) const {
        const unsigned n = g_->dim();
        Vec out = zero_vec(n);
        for (unsigned c = 0; c < n; ++c) {
            Matrix d = cobracket(*g_, r_, g_->basis(c));
            Rational acc(0);
            for (unsigned a = 0; a < n; ++a)
                for (unsigned b = 0; b < n; ++b)
                    if (!d[a][b].is_zero()) acc += xi[a] * eta[b] * d[a][b];
            out[c] = acc;
        }
        return out;
    }

    // CYB(r) = 0, invariance of t, L-R = t-contraction, L/R Lie morphisms,
    // dual bracket antisymmetry + Jacobi. All exact.
    Report validate() const {
        const unsigned n = g_->dim();
        if (!is_zero_tensor3(cyb(*g_, r_))) return {false, "CYB(r) != 0"};
        for (unsigned a = 0; a < n; ++a)
            if (!is_zero_matrix(cobracket_of_t(a))) return {false, "t not invariant"};
        for (unsigned a = 0; a < n; ++a) {
            Vec lam = g_->basis(a);
            Vec diff = L_map(lam);
            Vec rr = R_map(lam);
            Vec tp = t_pair(lam);
            for (unsigned j = 0; j < n; ++j)
                if (diff[j] - rr[j] != tp[j]) return {false, "L - R != t-contraction"};
        }
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                Vec db = dual_bracket(g_->basis(a), g_->basis(b));
                Vec lhsL = L_map(db);
                Vec rhsL = g_->bracket(L_map(g_->basis(a)), L_map(g_->basis(b)));
                if (lhsL != rhsL) return {false, "L is not a Lie algebra morphism"};
                Vec lhsR = R_map(db);
                Vec rhsR = g_->bracket(R_map(g_->basis(a)), R_map(g_->basis(b)));
                if (lhsR != rhsR) return {false, "R is not a Lie algebra morphism"};
            }
        // dual bracket: antisymmetry and Jacobi on basis triples
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                Vec ab = dual_bracket(g_->basis(a), g_->basis(b));
                Vec ba = dual_bracket(g_->basis(b), g_->basis(a));
                for (unsigned c = 0; c < n; ++c)
                    if (ab[c] + ba[c] != Rational(0))
                        return {false, "dual bracket not antisymmetric"};
            }
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                for (unsigned c = 0; c < n; ++c) {
                    Vec acc = dual_bracket(dual_bracket(g_->basis(a), g_->basis(b)),
                                           g_->basis(c));
                    Vec t2 = dual_bracket(dual_bracket(g_->basis(b), g_->basis(c)),
                                          g_->basis(a));
                    Vec t3 = dual_bracket(dual_bracket(g_->basis(c), g_->basis(a)),
                                          g_->basis(b));
                    for (unsigned m = 0; m < n; ++m) acc[m] += t2[m] + t3[m];
                    if (!is_zero_vec(acc)) return {false, "dual bracket violates Jacobi"};
                }
        return {};
    }

private:
    const LieAlgebra* g_;
    Matrix r_, r0_, t_;
    std::optional<Matrix> t_inverse_;

    static bool is_zero_matrix(const Matrix& m) {
        for (const auto& row : m)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

    Matrix cobracket_of_t(unsigned a) const { return cobracket(*g_, t_, g_->basis(a)); }
};

// Builtin algebras. sl2 basis (e, f, h), [h,e]=2e, [h,f]=-2f, [e,f]=h,
// r = e⊗f + (1/4) h⊗h (standard factorizable r-matrix).
struct AlgebraBundle {
    LieAlgebra algebra;
    Matrix r;
};

inline AlgebraBundle builtin_sl2() {
    LieAlgebra g(3, {"e", "f", "h"});
    g.set_structure_constant(0, 1, 2, Rational(1));   // [e,f] = h
    g.set_structure_constant(2, 0, 0, Rational(2));   // [h,e] = 2e
    g.set_structure_constant(2, 1, 1, Rational(-2));  // [h,f] = -2f
    Matrix r = zero_matrix(3);
    r[0][1] = Rational(1);
    r[2][2] = Rational(1, 4);
    return {std::move(g), std::move(r)};
}

inline AlgebraBundle builtin_abelian2() {
    LieAlgebra g(2, {"a", "b"});
    return {std::move(g), zero_matrix(2)};
}

}  // namespace liepois
