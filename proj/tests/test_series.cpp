#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liepois/group_map.hpp"
#include "liepois/linearizer.hpp"
#include "liepois/random.hpp"
#include "test_util.hpp"

using namespace liepois;
using namespace liepois_test;

namespace {

TensorSeries partial(const SeriesOps& ops, const TensorSeries& f, unsigned i) {
    return ops.slot_component(ops.differential(f), f.rank(), i);
}

// tautological dual-valued series λ = Σ_a ε^a λ_a
TensorSeries lambda_taut(unsigned dim, int N) {
    TensorSeries out(dim, 1, N);
    for (unsigned a = 0; a < dim; ++a) {
        std::vector<uint8_t> expo(dim, 0);
        expo[a] = 1;
        out.add_term({static_cast<uint8_t>(a)}, expo, Rational(1));
    }
    return out;
}

}  // namespace

TEST_CASE("differential: constants, linear and product-rule examples") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    TensorSeries c = ops.one_scalar(3, 4);
    CHECK(ops.differential(c).is_zero());
    // d(λ_1) = slot e_1
    TensorSeries lin = TensorSeries::coordinate(3, 1, 4);
    TensorSeries dlin = ops.differential(lin);
    TensorSeries expected(3, 1, 4);
    expected.add_term({1}, {0, 0, 0}, Rational(1));
    CHECK(dlin == expected);
    // d(λ_0 λ_1) = e_0-slot·λ_1 + e_1-slot·λ_0
    TensorSeries quad = ops.mul(TensorSeries::coordinate(3, 0, 4), lin);
    TensorSeries dq = ops.differential(quad);
    TensorSeries exp2(3, 1, 4);
    exp2.add_term({0}, {0, 1, 0}, Rational(1));
    exp2.add_term({1}, {1, 0, 0}, Rational(1));
    CHECK(dq == exp2);
}

TEST_CASE("differential agrees with a first-order substitution oracle") {
    // evaluate f(λ + ε e_i-direction) with ε as an extra abelian variable and
    // compare the ε-linear part against the symbolic derivative
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    LieAlgebra ext(4, {"a", "b", "c", "eps"});
    SeriesOps ops_ext(ext);
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        TensorSeries f(3, 0, 4);
        for (int d = 0; d <= 4; ++d)
            for (const auto& m : Linearizer::monomials(3, d)) f.add_term({}, m, rng.small_rational());
        for (unsigned dir = 0; dir < 3; ++dir) {
            // lift f to 4 variables
            TensorSeries f4(4, 0, 5);
            for (const auto& [k, c] : f.terms()) {
                std::vector<uint8_t> expo(4, 0);
                for (unsigned v = 0; v < 3; ++v) expo[v] = k.expo[v];
                f4.add_term({}, expo, c);
            }
            // components λ_v + δ_{v,dir} ε
            std::vector<TensorSeries> comps;
            for (unsigned v = 0; v < 4; ++v) {
                TensorSeries cv = TensorSeries::coordinate(4, v, 5);
                if (v == dir) cv += TensorSeries::coordinate(4, 3, 5);
                comps.push_back(cv);
            }
            TensorSeries shifted = ops_ext.compose(f4, comps);
            // ε-linear coefficient, ε-variable dropped
            TensorSeries linear(3, 0, 4);
            for (const auto& [k, c] : shifted.terms()) {
                if (k.expo[3] != 1) continue;
                std::vector<uint8_t> expo(3, 0);
                for (unsigned v = 0; v < 3; ++v) expo[v] = k.expo[v];
                linear.add_term({}, expo, c);
            }
            CHECK(linear == partial(ops, f, dir));
        }
    }
}

TEST_CASE("alternate: rank 1 identity, rank 2 signs, rank 3 cyclic") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    TensorSeries v(3, 1, 3);
    v.add_term({0}, {0, 1, 0}, Rational(2, 3));
    CHECK(ops.alternate(v) == v);

    // rank 2: x - x^{2,1}; symmetric input dies, antisymmetric doubles
    TensorSeries sym(3, 2, 3);
    sym.add_term({0, 1}, {0, 0, 0}, Rational(1));
    sym.add_term({1, 0}, {0, 0, 0}, Rational(1));
    CHECK(ops.alternate(sym).is_zero());
    TensorSeries anti(3, 2, 3);
    anti.add_term({0, 1}, {0, 0, 0}, Rational(1));
    anti.add_term({1, 0}, {0, 0, 0}, Rational(-1));
    CHECK(ops.alternate(anti) == anti.scaled(Rational(2)));

    // rank 3 single tensor: plain cyclic sum
    TensorSeries t(3, 3, 3);
    t.add_term({0, 1, 2}, {0, 0, 0}, Rational(1));
    TensorSeries alt = ops.alternate(t);
    TensorSeries want(3, 3, 3);
    want.add_term({0, 1, 2}, {0, 0, 0}, Rational(1));
    want.add_term({2, 0, 1}, {0, 0, 0}, Rational(1));
    want.add_term({1, 2, 0}, {0, 0, 0}, Rational(1));
    CHECK(alt == want);
}

TEST_CASE("Alt∘d kills second differentials (closedness of exact fields)") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        TensorSeries f = rng.random_function(3, 4, 4);
        CHECK(ops.alternate(ops.differential(ops.differential(f))).is_zero());
    }
}

TEST_CASE("contract_lambda") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    Quasitriangular qt(g, r);
    // constant e_i becomes the coordinate λ_i
    TensorSeries ei = TensorSeries::constant_tensor1(g, g.basis(1), 4);
    CHECK(ops.contract_lambda(ei, 0) == TensorSeries::coordinate(3, 1, 4));
    // ⟨λ⊗id, t⟩ = λ∨
    RMatrixOps rmx(qt, ops);
    TensorSeries tS = rmx.t_series(4);
    CHECK(ops.contract_lambda(tS, 0) == rmx.lambda_vee(4));
    // double contraction of an antisymmetric rank-2 tensor vanishes
    TensorSeries anti(3, 2, 4);
    anti.add_term({0, 2}, {0, 0, 0}, Rational(1));
    anti.add_term({2, 0}, {0, 0, 0}, Rational(-1));
    CHECK(ops.contract_lambda(ops.contract_lambda(anti, 0), 0).is_zero());
}

TEST_CASE("bch: unit laws and abelian case") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Rng rng(29);
    TensorSeries X = rng.random_field(3, 2, 3);
    CHECK(grp.bch(X, ops.zero(1, 3)) == X);
    CHECK(grp.bch(ops.zero(1, 3), X) == X);
    TensorSeries with_const = X;
    with_const.add_term({0}, {0, 0, 0}, Rational(1));
    CHECK_THROWS_AS(grp.bch(with_const, X), NonPositiveDegreeInput);

    auto [ga, ra] = builtin_abelian2();
    SeriesOps opsa(ga);
    GroupOps grpa(opsa);
    Rng rng2(31);
    TensorSeries Xa = rng2.random_field(2, 2, 3), Ya = rng2.random_field(2, 2, 3);
    CHECK(grpa.bch(Xa, Ya) == Xa + Ya);
}

TEST_CASE("bch matches the closed degree-3 expansion on sl2") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    TensorSeries X(3, 1, 3), Y(3, 1, 3);
    X.add_term({0}, {0, 0, 1}, Rational(1));  // e·λ_h
    Y.add_term({1}, {1, 0, 0}, Rational(1));  // f·λ_e
    TensorSeries XY = ops.bracket1(X, Y);
    TensorSeries expected = X + Y + XY.scaled(Rational(1, 2)) +
                            ops.bracket1(X, XY).scaled(Rational(1, 12)) +
                            ops.bracket1(Y, ops.bracket1(Y, X)).scaled(Rational(1, 12));
    CHECK(grp.bch(X, Y) == expected);
}

TEST_CASE("bch against the matrix exp/log oracle in the adjoint representation") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Rng rng(37);
    for (int trial = 0; trial < 4; ++trial) {
        TensorSeries X = rng.random_field(3, 2, 4);
        TensorSeries Y = rng.random_field(3, 2, 4);
        TensorSeries Z = grp.bch(X, Y);
        SMat lhs = ad_matrix_of_field(ops, Z);
        SMat prod = smat_mul(ops, smat_exp(ops, ad_matrix_of_field(ops, X)),
                             smat_exp(ops, ad_matrix_of_field(ops, Y)));
        SMat rhs = smat_log(ops, prod);
        CHECK(smat_equal(lhs, rhs));
    }
}

TEST_CASE("bch(X,-X) = 0 and associativity") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Rng rng(41);
    TensorSeries X = rng.random_field(3, 3, 4);
    CHECK(grp.bch(X, -X).is_zero());
    TensorSeries Y = rng.random_field(3, 3, 4);
    TensorSeries Z = rng.random_field(3, 3, 4);
    CHECK(grp.bch(X, grp.bch(Y, Z)) == grp.bch(grp.bch(X, Y), Z));
}

TEST_CASE("apply_analytic: unit, bracket action, multiplicativity, pole guard") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    Quasitriangular qt(g, r);
    RMatrixOps rmx(qt, ops);
    Rng rng(43);
    TensorSeries X = rng.random_field(3, 2, 4);
    TensorSeries target = rmx.t_series(4);
    std::vector<Rational> one = {Rational(1)};
    CHECK(ops.apply_analytic(one, X, target, 1) == target);
    std::vector<Rational> z = {Rational(0), Rational(1)};
    CHECK(ops.apply_analytic(z, X, target, 1) == ops.ad_once(X, target, 1));
    auto p1 = phi_coefficients(4);
    auto p2 = dexp_left_coefficients(4);
    auto prod = convolve_coefficients(p1, p2, 4);
    CHECK(ops.apply_analytic(prod, X, target, 0) ==
          ops.apply_analytic(p1, X, ops.apply_analytic(p2, X, target, 0), 0));
    TensorSeries with_const = X;
    with_const.add_term({2}, {0, 0, 0}, Rational(1));
    CHECK_THROWS_AS(ops.apply_analytic(one, with_const, target, 0), PoleAtZero);
}

TEST_CASE("log derivatives: A=0, leading term, intertwining, matrix oracle") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Quasitriangular qt(g, r);
    CHECK(grp.left_log_derivative(GroupMap::identity(3, 4)).is_zero());

    // the solver's g0: A = -(1/2)(id⊗λ)(r); lowest degree of D is dA itself
    GaugeOps gauge(grp);
    RMatrixOps rmx(qt, ops);
    Linearizer lin(qt, ops, grp, gauge, rmx);
    GroupMap g0(lin.initial_log(4));
    TensorSeries D = grp.left_log_derivative(g0);
    CHECK(D.pure_degree_part(0) == ops.differential(g0.A).pure_degree_part(0));

    Rng rng(47);
    GroupMap gm(rng.random_field(3, 2, 4));
    TensorSeries L = grp.left_log_derivative(gm);
    TensorSeries R = grp.right_log_derivative(gm);
    CHECK(R == grp.Ad(gm, L, 0, false));

    // matrix oracle: exp(-ad A) ∂_i exp(ad A) = ad(D_i) in the adjoint rep
    SMat M = smat_exp(ops, ad_matrix_of_field(ops, gm.A));
    SMat Minv = smat_exp(ops, ad_matrix_of_field(ops, -gm.A));
    for (unsigned i = 0; i < 3; ++i) {
        SMat dM = M;
        for (auto& row : dM)
            for (auto& e : row) e = partial(ops, e, i);
        SMat lhs = smat_mul(ops, Minv, dM);
        SMat rhs = ad_matrix_of_field(ops, ops.slot_component(L, 1, i));
        // entries of lhs are exact only below the truncation degree
        bool equal = true;
        for (size_t a = 0; a < lhs.size(); ++a)
            for (size_t b = 0; b < lhs.size(); ++b)
                equal = equal && (lhs[a][b].up_to_degree(3) == rhs[a][b].up_to_degree(3));
        CHECK(equal);
    }
}

TEST_CASE("substitution: identity, linearity, associativity") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Rng rng(53);
    TensorSeries f = rng.random_function(3, 3, 4);
    FormalDiffeo id{ops.identity_components(4)};
    CHECK(grp.substitute(f, id) == f);

    // linear f picks up the perturbation linearly
    TensorSeries flin = TensorSeries::coordinate(3, 0, 4);
    FormalDiffeo pert{ops.identity_components(4)};
    TensorSeries bump = rng.random_function(3, 2, 4);
    pert.comps[0] += bump;
    CHECK(grp.substitute(flin, pert) == flin + bump);

    auto random_diffeo = [&](int seed) {
        Rng r2(seed);
        FormalDiffeo s{ops.identity_components(4)};
        for (unsigned v = 0; v < 3; ++v) {
            s.comps[v] += r2.random_function(3, 2, 4);
            s.comps[v] += r2.random_function(3, 3, 4);
        }
        return s;
    };
    FormalDiffeo s1 = random_diffeo(59), s2 = random_diffeo(61);
    TensorSeries lhs = grp.substitute(grp.substitute(f, s1), s2);
    TensorSeries rhs = grp.substitute(f, grp.compose_diffeo(s1, s2));
    CHECK(lhs == rhs);
}

TEST_CASE("invert_diffeo round trip") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    Rng rng(67);
    FormalDiffeo s{ops.identity_components(4)};
    for (unsigned v = 0; v < 3; ++v) s.comps[v] += rng.random_function(3, 2, 4);
    FormalDiffeo inv = grp.invert_diffeo(s);
    FormalDiffeo both = grp.compose_diffeo(s, inv);
    FormalDiffeo id{ops.identity_components(4)};
    for (unsigned v = 0; v < 3; ++v) CHECK(both.comps[v] == id.comps[v]);
}

TEST_CASE("ad_star_diffeo: identity cases and the coadjoint-series oracle") {
    auto [ga, ra] = builtin_abelian2();
    SeriesOps opsa(ga);
    GroupOps grpa(opsa);
    Rng rng(71);
    FormalDiffeo th = grpa.ad_star_diffeo(GroupMap(rng.random_field(2, 2, 3)));
    CHECK(th.is_identity());

    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    GroupOps grp(ops);
    CHECK(grp.ad_star_diffeo(GroupMap::identity(3, 4)).is_identity());

    Quasitriangular qt(g, r);
    GaugeOps gauge(grp);
    RMatrixOps rmx(qt, ops);
    Linearizer lin(qt, ops, grp, gauge, rmx);
    GroupMap g0(lin.initial_log(4));
    FormalDiffeo theta = grp.ad_star_diffeo(g0);
    // oracle: Ad*(e^A)λ = e^{ad*(A)}(λ) applied to the tautological dual series
    TensorSeries lam = lambda_taut(3, 4);
    TensorSeries moved =
        ops.apply_analytic_star(exp_coefficients(4, false), g0.A, lam, 0);
    for (unsigned i = 0; i < 3; ++i)
        CHECK(theta.comps[i] == ops.slot_component(moved, 0, i));
    CHECK_FALSE(theta.is_identity());
    CHECK(theta.comps[0].pure_degree_part(2).term_count() > 0);
}

TEST_CASE("canonical rendering is graded-lex ordered") {
    auto [g, r] = builtin_sl2();
    SeriesOps ops(g);
    TensorSeries s(3, 1, 3);
    s.add_term({2}, {0, 2, 0}, Rational(-1, 4));
    s.add_term({0}, {1, 0, 0}, Rational(3));
    s.add_term({1}, {0, 0, 0}, Rational(1, 2));
    CHECK(s.to_string(g.labels()) ==
          "f * 1 : 1/2\n"
          "e * e : 3\n"
          "h * f^2 : -1/4\n");
}
