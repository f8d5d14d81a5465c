#pragma once

#include <vector>

#include "liepois/group_map.hpp"

namespace liepois {

// An element of the Hamiltonian gauge group Map_0^ham(g*,G), exponentiated
// from a closed field v (Alt(dv) = 0) and carrying its certificate.
struct HamElement {
    GroupMap element;
    TensorSeries field;  // the Lie-algebra element v with exp_*(v) = element
    bool certified_ham = false;
};

class GaugeOps {
public:
    // polynomial in the flow time t, coefficients are series
    using TPoly = std::vector<TensorSeries>;

    explicit GaugeOps(const GroupOps& grp) : grp_(&grp), ops_(&grp.series()) {}

    // left-hand side of the Hamiltonian membership equation:
    //   g1^{-1}d2(g1) - g2^{-1}d1(g2) + ⟨id⊗id⊗λ, [g1^{-1}d3(g1), g2^{-1}d3(g2)]⟩
    // Exact through one degree below the truncation of log g; returned
    // truncated there.
    TensorSeries ham_residual(const GroupMap& g) const {
        return connection_terms(g).with_truncation(g.truncation() - 1);
    }

    // the same three terms without re-truncation (the twisted r0 assembles them
    // with the Ad(g⊗g)^{-1}(r0) term and handles degrees itself). The relative
    // sign of the λ-contracted commutator is the one that makes the membership
    // equation hold on exponentials of closed fields and the corrector step
    // integrable at every degree; the opposite sign fails both at degree 1.
    TensorSeries connection_terms(const GroupMap& g) const {
        TensorSeries D = grp_->left_log_derivative(g);
        TensorSeries out = D - D.swap_slots12();
        TensorSeries comm = ops_->bracket_placed(D, {0, 2}, D, {1, 2}, 3);
        return out - ops_->contract_lambda(comm, 2);
    }

    // g^{-1}δ_f(g): derivative of g along the KKS Hamiltonian field of f,
    // minus df. The generator of the gauge action attached to the potential f.
    TensorSeries infinitesimal_action(const TensorSeries& f, const GroupMap& g) const {
        if (f.rank() != 0) throw InputError("infinitesimal_action: f must be k=0");
        TensorSeries df = ops_->differential(f);
        TensorSeries out = -df;
        TensorSeries D = grp_->left_log_derivative(g);
        if (D.is_zero()) return out;
        const unsigned dim = ops_->algebra().dim();
        for (unsigned j = 0; j < dim; ++j) {
            TensorSeries Dj = ops_->slot_component(D, 1, j);
            if (Dj.is_zero()) continue;
            TensorSeries ej = TensorSeries::constant_tensor1(
                ops_->algebra(), ops_->algebra().basis(j), f.truncation());
            TensorSeries Xj = ops_->contract_lambda(ops_->bracket1(df, ej), 0);
            if (Xj.is_zero()) continue;
            out += ops_->scale_by_function(Dj, Xj);
        }
        return out;
    }

    // exp_* as the time-1 flow of the right-invariant field of v, solved
    // degree-by-degree over Q[t]: the t^p coefficient of log g_t comes
    // directly from the t^{p-1} coefficient of the field, and the field
    // raises polynomial degree, so t-powers beyond N vanish.
    TPoly exp_star_flow(const TensorSeries& v) const {
        require_ham_field(v);
        const int N = v.truncation();
        TPoly A(static_cast<size_t>(N) + 1, ops_->zero(1, N));
        for (int p = 1; p <= N; ++p) {
            TPoly F = flow_field(A, v);
            A[p] = F[p - 1].scaled(Rational(1, p));
        }
        return A;
    }

    HamElement exp_star(const TensorSeries& v) const {
        TPoly A = exp_star_flow(v);
        return HamElement{GroupMap(eval_flow(A, Rational(1))), v, true};
    }
    GroupMap exp_star_at(const TensorSeries& v, const Rational& time) const {
        return GroupMap(eval_flow(exp_star_flow(v), time));
    }
    static TensorSeries eval_flow(const TPoly& A, const Rational& time) {
        TensorSeries out = TensorSeries::zero_like(A[0]);
        Rational tp(1);
        for (size_t p = 0; p < A.size(); ++p) {
            if (p > 0) tp *= time;
            out += A[p].scaled(tp);
        }
        return out;
    }

    // (α * g)(λ) = g(Ad*(α(λ))(λ)) α(λ); requires the certificate
    GroupMap act_on_solution(const HamElement& alpha, const GroupMap& g) const {
        if (!alpha.certified_ham)
            throw NotHamiltonian("act_on_solution: gauge element not certified");
        return grp_->star_product(alpha.element, g);
    }

private:
    const GroupOps* grp_;
    const SeriesOps* ops_;

    void require_ham_field(const TensorSeries& v) const {
        if (v.rank() != 1) throw InputError("exp_star: field must be rank 1");
        if (v.has_constant_term())
            throw NotHamiltonian("exp_star: field has a constant term");
        if (!ops_->alternate(ops_->differential(v)).is_zero())
            throw NotHamiltonian("exp_star: Alt(d v) != 0");
    }

    // --- small Q[t] lift of the series calculus ---

    TPoly tp_const(const TensorSeries& s, size_t len) const {
        TPoly out(len, TensorSeries::zero_like(s));
        out[0] = s;
        return out;
    }
    TPoly tp_ad_once(const TPoly& X, const TPoly& T, unsigned slot) const {
        TPoly out(T.size(), TensorSeries(T[0].dim(), T[0].rank(), T[0].truncation()));
        for (size_t a = 0; a < X.size(); ++a) {
            if (X[a].is_zero()) continue;
            for (size_t b = 0; a + b < T.size(); ++b) {
                if (T[b].is_zero()) continue;
                out[a + b] += ops_->ad_once(X[a], T[b], slot);
            }
        }
        return out;
    }
    TPoly tp_ad_series(const std::vector<Rational>& psi, const TPoly& X, const TPoly& T,
                       unsigned slot) const {
        TPoly out(T.size(), TensorSeries(T[0].dim(), T[0].rank(), T[0].truncation()));
        for (size_t p = 0; p < T.size(); ++p) out[p] = T[p].scaled(psi[0]);
        TPoly power = T;
        const int N = T[0].truncation();
        for (int m = 1; m < static_cast<int>(psi.size()) && m <= N; ++m) {
            power = tp_ad_once(X, power, slot);
            bool zero = true;
            for (const auto& s : power) zero = zero && s.is_zero();
            if (zero) break;
            if (psi[m].is_zero()) continue;
            for (size_t p = 0; p < T.size(); ++p) out[p] += power[p].scaled(psi[m]);
        }
        return out;
    }
    TPoly tp_mul(const TPoly& a, const TPoly& b) const {
        TPoly out(a.size(), TensorSeries(a[0].dim(), 0, a[0].truncation()));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; i + j < b.size(); ++j) {
                if (b[j].is_zero()) continue;
                out[i + j] += ops_->mul(a[i], b[j]);
            }
        }
        return out;
    }
    // compose a t-constant series with t-dependent coordinate components
    TPoly tp_compose(const TensorSeries& f, const std::vector<TPoly>& comps) const {
        const size_t len = comps[0].size();
        const int N = f.truncation();
        TPoly one = tp_const(ops_->one_scalar(f.dim(), N), len);
        std::vector<std::vector<TPoly>> pw(f.dim(), {one});
        auto power = [&](unsigned v, unsigned e) -> const TPoly& {
            while (pw[v].size() <= e) pw[v].push_back(tp_mul(pw[v].back(), comps[v]));
            return pw[v][e];
        };
        TPoly out(len, TensorSeries(f.dim(), f.rank(), N));
        for (const auto& [k, c] : f.terms()) {
            TPoly acc = one;
            for (unsigned v = 0; v < f.dim(); ++v)
                if (k.expo[v] > 0) acc = tp_mul(acc, power(v, k.expo[v]));
            for (size_t p = 0; p < len; ++p)
                for (const auto& [km, cm] : acc[p].terms())
                    out[p].add_term(k.slots, km.expo, c * cm);
        }
        return out;
    }

    // right-invariant field of v at exp(A_t):
    //   invdexp_{ad A}( Ad(exp(-A)) ( v ∘ θ_{exp A} ) )
    TPoly flow_field(const TPoly& A, const TensorSeries& v) const {
        const unsigned dim = ops_->algebra().dim();
        const int N = v.truncation();
        const size_t len = A.size();
        auto exp_neg = exp_coefficients(N, true);
        std::vector<TPoly> comps;
        for (unsigned i = 0; i < dim; ++i) {
            TensorSeries ei = TensorSeries::constant_tensor1(ops_->algebra(),
                                                             ops_->algebra().basis(i), N);
            TPoly moved = tp_ad_series(exp_neg, A, tp_const(ei, len), 0);
            TPoly comp(len, TensorSeries(dim, 0, N));
            for (size_t p = 0; p < len; ++p)
                comp[p] = ops_->contract_lambda(moved[p], 0);
            comps.push_back(std::move(comp));
        }
        TPoly w = tp_compose(v, comps);
        w = tp_ad_series(exp_neg, A, w, 0);
        return tp_ad_series(dexp_left_inverse_coefficients(N), A, w, 0);
    }
};

}  // namespace liepois
