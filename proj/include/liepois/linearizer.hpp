#pragma once

#include <vector>

#include "liepois/gauge.hpp"
#include "liepois/rmatrix.hpp"

namespace liepois {

struct SolverTraceRecord {
    int degree = 0;            // degree handled by this step
    size_t residual_terms = 0; // nonzero terms of the defect at that degree
    unsigned corrector_rank = 0;
    unsigned corrector_nullity = 0;
};

struct SolveResult {
    GroupMap g;                // log coordinates carried at truncation N+1
    TensorSeries residual;     // twisted_r0(g) - ρ_AM through degree N (certificate)
    std::vector<SolverTraceRecord> trace;
    std::vector<GroupMap> states;  // g_0, g_1, ... (after each correction)
};

// Successive-approximation construction of g(λ) with (r0)^g = ρ_AM.
class Linearizer {
public:
    Linearizer(const Quasitriangular& qt, const SeriesOps& ops, const GroupOps& grp,
               const GaugeOps& gauge, const RMatrixOps& rmx)
        : qt_(&qt), ops_(&ops), grp_(&grp), gauge_(&gauge), rmx_(&rmx) {}

    // (r0)^g: the connection terms plus Ad(g⊗g)^{-1}(r0). The log-derivative
    // terms are exact through one degree below log g's truncation, so the
    // result is returned truncated there. Certified antisymmetric.
    TensorSeries twisted_r0(const GroupMap& g) const {
        TensorSeries out = gauge_->connection_terms(g);
        TensorSeries ad_r0 = rmx_->r0_series(g.truncation());
        ad_r0 = grp_->Ad(g, ad_r0, 0, true);
        ad_r0 = grp_->Ad(g, ad_r0, 1, true);
        out = (out + ad_r0).with_truncation(g.truncation() - 1);
        if (!RMatrixOps::is_antisymmetric2(out))
            throw Error("twisted_r0: antisymmetry certification failed");
        return out;
    }

    // solve Alt(dβ) = α for β of pure polynomial degree deg(α)+1, by exact
    // Gauss-Jordan elimination; free unknowns are set to zero under the
    // canonical (degree, exponent, slot) column order, so the output is
    // deterministic. α must be antisymmetric of pure degree with Alt(dα) = 0.
    TensorSeries corrector_solve(const TensorSeries& alpha, unsigned* rank_out = nullptr,
                                 unsigned* nullity_out = nullptr) const {
        if (alpha.rank() != 2) throw InputError("corrector_solve: alpha must be rank 2");
        const unsigned dim = ops_->algebra().dim();
        const int N = alpha.truncation();
        if (alpha.is_zero()) {
            if (rank_out) *rank_out = 0;
            if (nullity_out) *nullity_out = 0;
            return ops_->zero(1, N);
        }
        int deg = alpha.min_degree();
        if (alpha.pure_degree_part(deg) != alpha)
            throw InputError("corrector_solve: alpha must have pure degree");
        if (!RMatrixOps::is_antisymmetric2(alpha))
            throw InputError("corrector_solve: alpha must be antisymmetric");
        if (!ops_->alternate(ops_->differential(alpha)).is_zero())
            throw Inconsistent("corrector_solve: Alt(d alpha) != 0");

        // unknowns: β = Σ x_{a,m} e_a λ^m over monomials m of degree deg+1
        std::vector<std::vector<uint8_t>> monos = monomials(dim, deg + 1);
        struct Unknown {
            unsigned slot;
            std::vector<uint8_t> expo;
        };
        std::vector<Unknown> unknowns;
        for (const auto& m : monos)
            for (unsigned a = 0; a < dim; ++a) unknowns.push_back({a, m});

        // equations: components of Alt(dβ) - α, indexed by rank-2 term keys
        std::map<TensorSeries::Key, unsigned> row_of;
        std::vector<TensorSeries> columns;
        for (const auto& u : unknowns) {
            TensorSeries unit(dim, 1, N);
            unit.add_term({static_cast<uint8_t>(u.slot)}, u.expo, Rational(1));
            TensorSeries col = ops_->alternate(ops_->differential(unit));
            for (const auto& [k, c] : col.terms()) row_of.emplace(k, 0);
            columns.push_back(std::move(col));
        }
        for (const auto& [k, c] : alpha.terms()) row_of.emplace(k, 0);
        unsigned nrows = 0;
        for (auto& [k, idx] : row_of) idx = nrows++;

        const unsigned ncols = static_cast<unsigned>(unknowns.size());
        std::vector<std::vector<Rational>> mat(nrows,
                                               std::vector<Rational>(ncols + 1, Rational(0)));
        for (unsigned c = 0; c < ncols; ++c)
            for (const auto& [k, coef] : columns[c].terms())
                mat[row_of.at(k)][c] = coef;
        for (const auto& [k, coef] : alpha.terms()) mat[row_of.at(k)][ncols] = coef;

        // exact Gauss-Jordan, pivots in column order
        std::vector<int> pivot_col_of_row(nrows, -1);
        unsigned rank = 0;
        for (unsigned col = 0; col < ncols && rank < nrows; ++col) {
            unsigned prow = rank;
            while (prow < nrows && mat[prow][col].is_zero()) ++prow;
            if (prow == nrows) continue;
            std::swap(mat[prow], mat[rank]);
            Rational inv = Rational(1) / mat[rank][col];
            for (unsigned j = col; j <= ncols; ++j) mat[rank][j] *= inv;
            for (unsigned r = 0; r < nrows; ++r) {
                if (r == rank || mat[r][col].is_zero()) continue;
                Rational f = mat[r][col];
                for (unsigned j = col; j <= ncols; ++j) mat[r][j] -= f * mat[rank][j];
            }
            pivot_col_of_row[rank] = static_cast<int>(col);
            ++rank;
        }
        for (unsigned r = rank; r < nrows; ++r)
            if (!mat[r][ncols].is_zero())
                throw Inconsistent("corrector_solve: no solution");

        TensorSeries beta(dim, 1, N);
        for (unsigned r = 0; r < rank; ++r) {
            int col = pivot_col_of_row[r];
            if (col < 0 || mat[r][ncols].is_zero()) continue;
            const auto& u = unknowns[static_cast<unsigned>(col)];
            beta.add_term({static_cast<uint8_t>(u.slot)}, u.expo, mat[r][ncols]);
        }
        if (rank_out) *rank_out = rank;
        if (nullity_out) *nullity_out = ncols - rank;
        return beta;
    }

    // order-by-order construction: g0 = exp(-r/2) (as the linear map of λ),
    // then at each degree n+1 the defect α of (r0)^g against ρ_AM is removed
    // by acting with the pointwise exponential of -β, Alt(dβ) = α.
    SolveResult solve_g(int N, int max_degree = 6) const {
        if (N < 1) throw InputError("solve_g: N must be >= 1");
        if (N > max_degree) throw DegreeOverflow("solve_g: N exceeds configured bound");
        const int NA = N + 1;  // log g carries one degree more than the residual
        GroupMap g(initial_log(NA));
        TensorSeries target = rmx_->rho_am(N);
        std::vector<SolverTraceRecord> trace;
        std::vector<GroupMap> states;
        states.push_back(g);
        for (int n = 0; n < N; ++n) {
            TensorSeries delta = twisted_r0(g).with_truncation(N) - target;
            TensorSeries alpha = delta.pure_degree_part(static_cast<unsigned>(n + 1));
            SolverTraceRecord rec;
            rec.degree = n + 1;
            rec.residual_terms = alpha.term_count();
            if (!alpha.is_zero()) {
                TensorSeries beta =
                    corrector_solve(alpha.with_truncation(NA), &rec.corrector_rank,
                                    &rec.corrector_nullity);
                GroupMap h(beta.scaled(Rational(-1)));
                g = grp_->star_product(h, g);
            }
            trace.push_back(rec);
            states.push_back(g);
        }
        TensorSeries residual = twisted_r0(g).with_truncation(N) - target;
        return SolveResult{std::move(g), std::move(residual), std::move(trace),
                           std::move(states)};
    }

    // (CYB(ρ) - Alt(dρ)) - (Z - (1/2)[r^{1,234}, α^{2,3,4}]) for ρ = ρ_inv + α
    // with α supported in degrees ≥ m, compared modulo ∧³(g)⊗S(g)_{≥m}, i.e.
    // through degree m-1 (for α = 0 through the full computable range). This is
    // the instance the successive approximation consumes: it contains the
    // closedness of the defect at degree m-1 on top of the invariant part's
    // own Yang-Baxter identity. ρ_inv must be invariant and log g = -r/2
    // modulo degree ≥ 2.
    TensorSeries lemma1_residual(const GroupMap& g, const TensorSeries& rho_inv,
                                 const TensorSeries& alpha, const TensorSeries& Z) const {
        if (g.A.pure_degree_part(1) != initial_log(g.truncation()).pure_degree_part(1))
            throw InputError("lemma1_residual: log g != -r/2 modulo degree >= 2");
        if (!ops_->is_invariant(rho_inv))
            throw NotInvariant("lemma1_residual: rho_inv is not g-invariant");
        TensorSeries rho = rho_inv + alpha;
        TensorSeries lhs = rmx_->cyb_series(rho) - ops_->alternate(ops_->differential(rho));
        TensorSeries rhs = Z - r_diagonal_bracket(alpha).scaled(Rational(1, 2));
        int through = alpha.is_zero() ? rho.truncation() - 1
                                      : std::min(alpha.min_degree() - 1,
                                                 rho.truncation() - 1);
        if (through < 0) return ops_->zero(3, rho.truncation());
        return (lhs - rhs).up_to_degree(static_cast<unsigned>(through));
    }

    // [r^{1,234}, α^{2,3,4}] = Σ_{ij} r_{ij} e_i ⊗ (e_j · α), where e_j acts by
    // the total adjoint action on α's slots and polynomial part
    TensorSeries r_diagonal_bracket(const TensorSeries& alpha) const {
        const unsigned dim = ops_->algebra().dim();
        TensorSeries out(dim, alpha.rank() + 1, alpha.truncation());
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) {
                if (qt_->r()[i][j].is_zero()) continue;
                TensorSeries acted = ops_->act_adjoint_basis(j, alpha);
                if (acted.is_zero()) continue;
                out += ops_->prepend_constant_slot(acted, i).scaled(qt_->r()[i][j]);
            }
        return out;
    }

    TensorSeries initial_log(int N) const {
        const unsigned dim = ops_->algebra().dim();
        TensorSeries A(dim, 1, N);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j) {
                if (qt_->r()[i][j].is_zero()) continue;
                std::vector<uint8_t> expo(dim, 0);
                expo[j] = 1;
                A.add_term({static_cast<uint8_t>(i)}, expo, -qt_->r()[i][j] / Rational(2));
            }
        return A;
    }

    static std::vector<std::vector<uint8_t>> monomials(unsigned dim, int degree) {
        std::vector<std::vector<uint8_t>> out;
        std::vector<uint8_t> cur(dim, 0);
        fill_monomials(dim, degree, 0, cur, out);
        return out;
    }

private:
    const Quasitriangular* qt_;
    const SeriesOps* ops_;
    const GroupOps* grp_;
    const GaugeOps* gauge_;
    const RMatrixOps* rmx_;

    static void fill_monomials(unsigned dim, int remaining, unsigned var,
                               std::vector<uint8_t>& cur,
                               std::vector<std::vector<uint8_t>>& out) {
        if (var + 1 == dim) {
            cur[var] = static_cast<uint8_t>(remaining);
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[var] = static_cast<uint8_t>(e);
            fill_monomials(dim, remaining - e, var + 1, cur, out);
        }
        cur[var] = 0;
    }
};

}  // namespace liepois
