#pragma once

#include "liepois/quasitriangular.hpp"
#include "liepois/tensor_series.hpp"
#include "liepois/taylor.hpp"

namespace liepois {

enum class RMatrixKind { AM, AM_nu, FM, Twisted };

// A dynamical r-matrix value: rank-2, antisymmetric in its slots (certified at
// construction), tagged with its provenance.
struct DynamicalRMatrix {
    TensorSeries value;
    RMatrixKind kind;

    DynamicalRMatrix(TensorSeries v, RMatrixKind k) : value(std::move(v)), kind(k) {
        if (value.rank() != 2) throw InputError("DynamicalRMatrix: rank must be 2");
        if (!(value + value.swap_slots12()).is_zero())
            throw Error("DynamicalRMatrix: antisymmetry certification failed");
    }
};

// Closed-form dynamical r-matrices and their Yang-Baxter residuals.
class RMatrixOps {
public:
    RMatrixOps(const Quasitriangular& qt, const SeriesOps& ops)
        : qt_(&qt), ops_(&ops) {}

    // λ∨ = (λ⊗id)(t), a rank-1 series with degree-1 polynomial part
    TensorSeries lambda_vee(int N) const {
        const unsigned dim = ops_->algebra().dim();
        TensorSeries out(dim, 1, N);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) {
                if (qt_->t()[i][j].is_zero()) continue;
                std::vector<uint8_t> expo(dim, 0);
                expo[i] = 1;
                out.add_term({static_cast<uint8_t>(j)}, expo, qt_->t()[i][j]);
            }
        return out;
    }

    TensorSeries t_series(int N) const {
        return TensorSeries::constant_tensor2(ops_->algebra(), qt_->t(), N);
    }
    TensorSeries r0_series(int N) const {
        return TensorSeries::constant_tensor2(ops_->algebra(), qt_->r0(), N);
    }
    TensorSeries r_series(int N) const {
        return TensorSeries::constant_tensor2(ops_->algebra(), qt_->r(), N);
    }

    static bool is_antisymmetric2(const TensorSeries& x) {
        return (x + x.swap_slots12()).is_zero();
    }

    // ρ_AM = (id ⊗ φ(ad λ∨))(t), φ(z) = -1/z + (1/2)coth(z/2)
    TensorSeries rho_am(int N) const {
        TensorSeries out =
            ops_->apply_analytic(phi_coefficients(N), lambda_vee(N), t_series(N), 1);
        if (!is_antisymmetric2(out))
            throw Error("rho_am: antisymmetry certification failed");
        return out;
    }

    // ρ_AM^ν(λ) = 2ν ρ_AM(2νλ): degree-d coefficients scale by (2ν)^{d+1}
    TensorSeries rho_am_nu(const Rational& nu, int N) const {
        TensorSeries base = rho_am(N);
        TensorSeries out = TensorSeries::zero_like(base);
        Rational two_nu = Rational(2) * nu;
        for (const auto& [k, c] : base.terms())
            out.add_term(k.slots, k.expo, c * two_nu.pow(static_cast<int>(k.degree()) + 1));
        return out;
    }

    // [t^{1,2}, t^{2,3}], constant rank 3
    TensorSeries t12_t23(int N) const {
        TensorSeries t = t_series(N);
        return ops_->bracket_placed(t, {0, 1}, t, {1, 2}, 3);
    }

    // Z_ν = (ν² - 1/4)[t^{1,2}, t^{2,3}]
    TensorSeries z_nu(const Rational& nu, int N) const {
        return t12_t23(N).scaled(nu * nu - Rational(1, 4));
    }

    // CYB on series: [ρ^{12},ρ^{13}] + [ρ^{12},ρ^{23}] + [ρ^{13},ρ^{23}]
    TensorSeries cyb_series(const TensorSeries& rho) const {
        TensorSeries out = ops_->bracket_placed(rho, {0, 1}, rho, {0, 2}, 3);
        out += ops_->bracket_placed(rho, {0, 1}, rho, {1, 2}, 3);
        out += ops_->bracket_placed(rho, {0, 2}, rho, {1, 2}, 3);
        return out;
    }

    // CYB(ρ) - Alt(dρ) - Z. The differential drops one polynomial degree, so
    // the residual is only meaningful through N-1 and is truncated there.
    TensorSeries cdybe_residual(const TensorSeries& rho, const TensorSeries& Z) const {
        TensorSeries lhs = cyb_series(rho) - ops_->alternate(ops_->differential(rho));
        return (lhs - Z).with_truncation(rho.truncation() - 1);
    }

    // the constant c with CYB(ρ) - Alt(dρ) = c·[t12,t23] at polynomial degree
    // 0. Nothing is hard-coded: c is read off the lowest-degree component and
    // the full proportionality is verified.
    Rational derive_z_constant(const TensorSeries& rho) const {
        TensorSeries lhs = cyb_series(rho) - ops_->alternate(ops_->differential(rho));
        TensorSeries deg0 = lhs.pure_degree_part(0);
        TensorSeries T = t12_t23(rho.truncation());
        if (T.is_zero()) {
            if (!deg0.is_zero())
                throw Inconsistent("derive_z_constant: [t12,t23] = 0 but residual != 0");
            return Rational(0);
        }
        const auto& [k0, c0] = *T.terms().begin();
        auto it = deg0.terms().find(k0);
        Rational c = (it == deg0.terms().end()) ? Rational(0) : it->second / c0;
        if (deg0 != T.scaled(c))
            throw Inconsistent("derive_z_constant: degree-0 residual not proportional");
        return c;
    }

    // ρ evaluated on G* through x̄ = log(L(g*)R(g*)^{-1}):
    //   (id ⊗ ψ_ν(ad x̄))(t),  ψ_ν(z) = -ν coth(νz) + (1/2)coth(z/2).
    // The poles cancel before expansion; ν = 0 degenerates to φ (so the result
    // is ρ_AM evaluated at x̄), ν = 1/2 gives identically zero.
    TensorSeries rho_fm_of_x(const TensorSeries& xbar, const Rational& nu, int N) const {
        if (xbar.rank() != 1) throw InputError("rho_fm_of_x: x must be rank 1");
        if (xbar.has_constant_term())
            throw NonPositiveDegreeInput("rho_fm_of_x: x has a constant term");
        TensorSeries out =
            ops_->apply_analytic(psi_nu_coefficients(nu, N), xbar, t_series(N), 1);
        if (!is_antisymmetric2(out))
            throw Error("rho_fm_of_x: antisymmetry certification failed");
        return out;
    }

    DynamicalRMatrix am(int N) const { return {rho_am(N), RMatrixKind::AM}; }
    DynamicalRMatrix am_nu(const Rational& nu, int N) const {
        return {rho_am_nu(nu, N), RMatrixKind::AM_nu};
    }
    DynamicalRMatrix fm(const TensorSeries& xbar, const Rational& nu, int N) const {
        return {rho_fm_of_x(xbar, nu, N), RMatrixKind::FM};
    }

private:
    const Quasitriangular* qt_;
    const SeriesOps* ops_;
};

}  // namespace liepois
