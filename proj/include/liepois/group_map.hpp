#pragma once

#include <vector>

#include "liepois/taylor.hpp"
#include "liepois/tensor_series.hpp"

namespace liepois {

// A formal map g* -> G with g(0) = 1, held in log coordinates:
// g(λ) = exp(A(λ)) with A ∈ g ⊗ S(g)_{>=1}.
struct GroupMap {
    TensorSeries A;

    explicit GroupMap(TensorSeries a) : A(std::move(a)) {
        if (A.rank() != 1) throw InputError("GroupMap: log coordinate must be rank 1");
        if (A.has_constant_term())
            throw InputError("GroupMap: log coordinate has a constant term (g(0) != 1)");
    }
    static GroupMap identity(unsigned dim, int N) {
        return GroupMap(TensorSeries(dim, 1, N));
    }
    int truncation() const { return A.truncation(); }
};

// A formal self-map of g* with identity linear part, one k=0 component series
// per coordinate.
struct FormalDiffeo {
    std::vector<TensorSeries> comps;

    bool is_identity() const {
        for (unsigned v = 0; v < comps.size(); ++v) {
            TensorSeries coord =
                TensorSeries::coordinate(static_cast<unsigned>(comps.size()), v,
                                         comps[v].truncation());
            if (comps[v] != coord) return false;
        }
        return true;
    }
};

class GroupOps {
public:
    explicit GroupOps(const SeriesOps& ops) : ops_(&ops) {}

    const SeriesOps& series() const { return *ops_; }

    // log(exp X · exp Y) by Dynkin's word expansion. Both arguments must have
    // zero constant term so that words longer than N vanish.
    TensorSeries bch(const TensorSeries& X, const TensorSeries& Y) const {
        if (X.rank() != 1 || Y.rank() != 1) throw InputError("bch: rank must be 1");
        if (X.has_constant_term() || Y.has_constant_term())
            throw NonPositiveDegreeInput("bch: argument has a constant term");
        const int N = std::min(X.truncation(), Y.truncation());
        TensorSeries out = ops_->zero(1, N);
        if (X.is_zero()) return out + Y;
        if (Y.is_zero()) return out + X;
        std::vector<std::pair<int, int>> blocks;
        enumerate_blocks(X, Y, blocks, 0, N, out);
        return out;
    }

    // the coefficient of ε in log(exp(ε e_a) · exp X): Dynkin words with the
    // letter e_a exactly once. e_a is constant, every other letter raises the
    // polynomial degree, so words stay short.
    TensorSeries bch_linear_in_first(unsigned a, const TensorSeries& X) const {
        if (X.has_constant_term())
            throw NonPositiveDegreeInput("bch_linear_in_first: X has a constant term");
        const int N = X.truncation();
        TensorSeries letter = TensorSeries::constant_tensor1(
            ops_->algebra(), ops_->algebra().basis(a), N);
        TensorSeries out = ops_->zero(1, N);
        std::vector<std::pair<int, int>> blocks;
        enumerate_blocks_linear(letter, X, blocks, 0, 0, N, out);
        return out;
    }

    // g^{-1}d(g) = ((1 - e^{-ad A})/ad A)(dA); value slot first, derivative
    // slot second. Exact through one degree less than A's truncation.
    TensorSeries left_log_derivative(const GroupMap& g) const {
        TensorSeries dA = ops_->differential(g.A);
        if (dA.is_zero()) return dA;
        return ops_->apply_analytic(dexp_left_coefficients(g.truncation()), g.A, dA, 0);
    }
    // (dg)g^{-1} = ((e^{ad A} - 1)/ad A)(dA)
    TensorSeries right_log_derivative(const GroupMap& g) const {
        TensorSeries dA = ops_->differential(g.A);
        if (dA.is_zero()) return dA;
        return ops_->apply_analytic(dexp_right_coefficients(g.truncation()), g.A, dA, 0);
    }

    // Ad(g^{±1}) on one slot, i.e. exp(±ad A)
    TensorSeries Ad(const GroupMap& g, const TensorSeries& target, unsigned slot,
                    bool inverse = false) const {
        return ops_->apply_analytic(exp_coefficients(target.truncation(), inverse), g.A,
                                    target, slot);
    }

    // θ(g): λ -> Ad*(g(λ))(λ), in coordinates ⟨λ, Ad(g^{-1}) e_i⟩
    FormalDiffeo ad_star_diffeo(const GroupMap& g) const {
        const unsigned dim = ops_->algebra().dim();
        FormalDiffeo out;
        for (unsigned i = 0; i < dim; ++i) {
            TensorSeries ei = TensorSeries::constant_tensor1(
                ops_->algebra(), ops_->algebra().basis(i), g.truncation());
            out.comps.push_back(ops_->contract_lambda(Ad(g, ei, 0, true), 0));
        }
        return out;
    }

    // f ∘ σ
    TensorSeries substitute(const TensorSeries& f, const FormalDiffeo& sigma) const {
        return ops_->compose(f, sigma.comps);
    }
    // σ ∘ τ (apply τ first)
    FormalDiffeo compose_diffeo(const FormalDiffeo& sigma, const FormalDiffeo& tau) const {
        FormalDiffeo out;
        for (const auto& c : sigma.comps) out.comps.push_back(ops_->compose(c, tau.comps));
        return out;
    }

    // (g1 * g2)(λ) = g2(Ad*(g1(λ))(λ)) g1(λ), in log coordinates
    GroupMap star_product(const GroupMap& g1, const GroupMap& g2) const {
        FormalDiffeo theta1 = ad_star_diffeo(g1);
        return GroupMap(bch(substitute(g2.A, theta1), g1.A));
    }

    GroupMap inverse(const GroupMap& g) const {
        // pointwise inverse is exp(-A); the *-inverse additionally undoes the
        // coordinate change: solve h with h ∘ θ(g) = -A pointwise, i.e.
        // (g * h) = 1 requires bch(h∘θ(g), A) = 0, so h∘θ(g) = -A.
        FormalDiffeo theta = ad_star_diffeo(g);
        FormalDiffeo theta_inv = invert_diffeo(theta);
        return GroupMap(ops_->compose(g.A.scaled(Rational(-1)), theta_inv.comps));
    }

    // order-by-order inverse of a diffeo with identity linear part
    FormalDiffeo invert_diffeo(const FormalDiffeo& sigma) const {
        const unsigned dim = ops_->algebra().dim();
        int N = sigma.comps.empty() ? 0 : sigma.comps[0].truncation();
        FormalDiffeo inv;
        for (unsigned v = 0; v < dim; ++v)
            inv.comps.push_back(TensorSeries::coordinate(dim, v, N));
        for (int it = 0; it < N; ++it) {
            // inv <- id - (sigma∘inv - id∘inv) ... fixed point of
            // inv_i = λ_i - (sigma_i - λ_i)∘inv
            FormalDiffeo next;
            for (unsigned v = 0; v < dim; ++v) {
                TensorSeries higher =
                    sigma.comps[v] - TensorSeries::coordinate(dim, v, N);
                next.comps.push_back(TensorSeries::coordinate(dim, v, N) -
                                     ops_->compose(higher, inv.comps));
            }
            inv = std::move(next);
        }
        return inv;
    }

private:
    const SeriesOps* ops_;

    static Rational word_coefficient(const std::vector<std::pair<int, int>>& blocks) {
        int n = static_cast<int>(blocks.size());
        int len = 0;
        Rational fact(1);
        for (auto [p, q] : blocks) {
            len += p + q;
            fact *= factorial(p) * factorial(q);
        }
        Rational c = Rational(1) / (Rational(n) * Rational(len) * fact);
        if (n % 2 == 0) c = -c;
        return c;
    }

    // right-nested bracket of the word X^{p1} Y^{q1} ... X^{pn} Y^{qn}
    TensorSeries word_bracket(const TensorSeries& X, const TensorSeries& Y,
                              const std::vector<std::pair<int, int>>& blocks) const {
        std::vector<const TensorSeries*> word;
        for (auto [p, q] : blocks) {
            for (int i = 0; i < p; ++i) word.push_back(&X);
            for (int i = 0; i < q; ++i) word.push_back(&Y);
        }
        TensorSeries acc = *word.back();
        for (size_t i = word.size() - 1; i-- > 0;) {
            acc = ops_->bracket1(*word[i], acc);
            if (acc.is_zero()) break;
        }
        return acc;
    }

    void enumerate_blocks(const TensorSeries& X, const TensorSeries& Y,
                          std::vector<std::pair<int, int>>& blocks, int len, int N,
                          TensorSeries& out) const {
        if (!blocks.empty()) {
            TensorSeries w = word_bracket(X, Y, blocks);
            if (!w.is_zero()) out += w.scaled(word_coefficient(blocks));
        }
        for (int p = 0; len + p <= N; ++p)
            for (int q = (p == 0 ? 1 : 0); len + p + q <= N; ++q) {
                blocks.emplace_back(p, q);
                enumerate_blocks(X, Y, blocks, len + p + q, N, out);
                blocks.pop_back();
            }
    }

    // blocks with Σp = 1 exactly (letter used once), Σq ≤ N
    void enumerate_blocks_linear(const TensorSeries& letter, const TensorSeries& X,
                                 std::vector<std::pair<int, int>>& blocks, int used_p,
                                 int len_q, int N, TensorSeries& out) const {
        if (!blocks.empty() && used_p == 1) {
            TensorSeries w = word_bracket(letter, X, blocks);
            if (!w.is_zero()) out += w.scaled(word_coefficient(blocks));
        }
        for (int p = 0; p + used_p <= 1; ++p)
            for (int q = (p == 0 ? 1 : 0); len_q + q <= N; ++q) {
                blocks.emplace_back(p, q);
                enumerate_blocks_linear(letter, X, blocks, used_p + p, len_q + q, N, out);
                blocks.pop_back();
            }
    }
};

}  // namespace liepois
