#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liepois/io.hpp"
#include "liepois/quasitriangular.hpp"
#include "liepois/random.hpp"
#include "test_util.hpp"

using namespace liepois;
using namespace liepois_test;

TEST_CASE("abelian algebra validates") {
    auto [g, r] = builtin_abelian2();
    CHECK(g.validate().ok);
    Quasitriangular qt(g, r);
    CHECK(qt.validate().ok);
    CHECK_FALSE(qt.factorizable());
}

TEST_CASE("sl2 validates, factorizable") {
    auto [g, r] = builtin_sl2();
    auto rep = g.validate();
    CHECK(rep.ok);
    // the one nontrivial Jacobi triple by hand:
    // [[e,f],h] + [[f,h],e] + [[h,e],f] = [h,h] + 2[f,e] + 2[e,f] = 0
    Vec j = g.bracket(g.bracket_basis(0, 1), g.basis(2));
    Vec j2 = g.bracket(g.bracket_basis(1, 2), g.basis(0));
    Vec j3 = g.bracket(g.bracket_basis(2, 0), g.basis(1));
    for (unsigned m = 0; m < 3; ++m) CHECK((j[m] + j2[m] + j3[m]).is_zero());
    Quasitriangular qt(g, r);
    CHECK(qt.validate().ok);
    CHECK(qt.factorizable());
}

TEST_CASE("antisymmetry defect is rejected at declaration") {
    LieAlgebra g(3, {"e", "f", "h"});
    g.set_structure_constant(2, 0, 0, Rational(2));
    CHECK_THROWS_AS(g.set_structure_constant(0, 2, 0, Rational(2)), AntisymmetryViolation);
    CHECK_THROWS_AS(g.set_structure_constant(1, 1, 0, Rational(1)), AntisymmetryViolation);
}

TEST_CASE("Jacobi violation reported with indices") {
    LieAlgebra g(3, {"x", "y", "z"});
    g.set_structure_constant(0, 1, 0, Rational(1));  // [x,y] = x
    g.set_structure_constant(1, 2, 1, Rational(1));  // [y,z] = y
    g.set_structure_constant(2, 0, 2, Rational(1));  // [z,x] = z
    auto rep = g.validate();
    CHECK_FALSE(rep.ok);
    CHECK(rep.message == "Jacobi identity violated");
    CHECK(rep.indices == std::vector<unsigned>{0, 1, 2});
}

TEST_CASE("cyb vanishes for sl2 r-matrix and r=0, certified by adjoint matrices") {
    auto [g, r] = builtin_sl2();
    Tensor3 c = cyb(g, r);
    CHECK(is_zero_tensor3(c));
    CHECK(is_zero_tensor3(cyb(g, zero_matrix(3))));

    // independent route: commutators of Kronecker products in the adjoint rep
    QMat r12 = qmat_zero(27), r13 = qmat_zero(27), r23 = qmat_zero(27);
    QMat id = qmat_identity(3);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) {
            if (r[i][j].is_zero()) continue;
            QMat ai = ad_matrix(g, i), aj = ad_matrix(g, j);
            r12 = qmat_add(r12, qmat_scale(qmat_kron(qmat_kron(ai, aj), id), r[i][j]));
            r13 = qmat_add(r13, qmat_scale(qmat_kron(qmat_kron(ai, id), aj), r[i][j]));
            r23 = qmat_add(r23, qmat_scale(qmat_kron(qmat_kron(id, ai), aj), r[i][j]));
        }
    QMat mat_cyb = qmat_add(qmat_add(qmat_comm(r12, r13), qmat_comm(r12, r23)),
                            qmat_comm(r13, r23));
    CHECK(qmat_is_zero(mat_cyb));
}

TEST_CASE("cyb defect certificate when the symmetric part is dropped") {
    auto [g, r_full] = builtin_sl2();
    Matrix r = zero_matrix(3);
    r[0][1] = Rational(1);  // e⊗f only
    Tensor3 c = cyb(g, r);
    CHECK_FALSE(is_zero_tensor3(c));
    // same defect through the adjoint-matrix oracle, component for component
    QMat id = qmat_identity(3);
    QMat ae = ad_matrix(g, 0), af = ad_matrix(g, 1);
    QMat r12 = qmat_kron(qmat_kron(ae, af), id);
    QMat r13 = qmat_kron(qmat_kron(ae, id), af);
    QMat r23 = qmat_kron(qmat_kron(id, ae), af);
    QMat mat_cyb = qmat_add(qmat_add(qmat_comm(r12, r13), qmat_comm(r12, r23)),
                            qmat_comm(r13, r23));
    CHECK(qmat_equal(mat_cyb, tensor3_in_adjoint(g, c)));
}

TEST_CASE("cobracket values on sl2") {
    auto [g, r] = builtin_sl2();
    Matrix dh = cobracket(g, r, g.basis(2));
    for (auto& row : dh)
        for (auto& x : row) CHECK(x.is_zero());
    // δ(e) = (1/2) e∧h
    Matrix de = cobracket(g, r, g.basis(0));
    CHECK(de[0][2] == Rational(1, 2));
    CHECK(de[2][0] == Rational(-1, 2));
    Rational total(0);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            if (!(i == 0 && j == 2) && !(i == 2 && j == 0)) total += de[i][j] * de[i][j];
    CHECK(total.is_zero());
    // abelian: always zero
    auto [ga, ra] = builtin_abelian2();
    Matrix z = cobracket(ga, ra, ga.basis(0));
    for (auto& row : z)
        for (auto& x : row) CHECK(x.is_zero());
}

TEST_CASE("dual bracket transposes the cobracket and is bilinear") {
    auto [g, r] = builtin_sl2();
    Quasitriangular qt(g, r);
    for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b) {
            Vec db = qt.dual_bracket(g.basis(a), g.basis(b));
            for (unsigned c = 0; c < 3; ++c) {
                Matrix d = cobracket(g, r, g.basis(c));
                CHECK(db[c] == d[a][b]);
            }
        }
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = {rng.small_rational(), rng.small_rational(), rng.small_rational()};
        Vec y = {rng.small_rational(), rng.small_rational(), rng.small_rational()};
        Rational s = rng.small_rational();
        Vec sx = x;
        for (auto& v : sx) v *= s;
        Vec lhs = qt.dual_bracket(sx, y);
        Vec rhs = qt.dual_bracket(x, y);
        for (unsigned c = 0; c < 3; ++c) CHECK(lhs[c] == s * rhs[c]);
    }
}

TEST_CASE("L/R maps: difference is t-contraction, morphism property held by validate") {
    auto [g, r] = builtin_sl2();
    Quasitriangular qt(g, r);
    for (unsigned a = 0; a < 3; ++a) {
        Vec l = qt.L_map(g.basis(a));
        Vec rr = qt.R_map(g.basis(a));
        Vec tp = qt.t_pair(g.basis(a));
        for (unsigned j = 0; j < 3; ++j) CHECK(l[j] - rr[j] == tp[j]);
    }
    CHECK(qt.validate().ok);
}

TEST_CASE("t inverse is exact") {
    auto [g, r] = builtin_sl2();
    Quasitriangular qt(g, r);
    const Matrix& tinv = qt.t_inverse();
    for (unsigned a = 0; a < 3; ++a) {
        // t_pair then t^{-1} back
        Vec v = qt.t_pair(g.basis(a));
        Vec back = zero_vec(3);
        for (unsigned x = 0; x < 3; ++x)
            for (unsigned j = 0; j < 3; ++j) back[x] += v[j] * tinv[j][x];
        for (unsigned x = 0; x < 3; ++x) CHECK(back[x] == (x == a ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("algebra JSON loader") {
    nlohmann::json doc = {
        {"dim", 3},
        {"basis", {"e", "f", "h"}},
        {"brackets", {{0, 1, 2, "1"}, {2, 0, 0, "2"}, {2, 1, 1, "-2"}}},
        {"r", {{0, 1, "1"}, {2, 2, "1/4"}}}};
    AlgebraBundle b = load_algebra_json(doc);
    CHECK(b.algebra.validate().ok);
    Quasitriangular qt(b.algebra, b.r);
    CHECK(qt.validate().ok);

    nlohmann::json bad = doc;
    bad["extra"] = 1;
    CHECK_THROWS_AS(load_algebra_json(bad), InputError);
    nlohmann::json decimal = doc;
    decimal["r"] = {{0, 1, "0.25"}};
    CHECK_THROWS_AS(load_algebra_json(decimal), InputError);
    nlohmann::json oob = doc;
    oob["brackets"] = {{0, 1, 5, "1"}};
    CHECK_THROWS_AS(load_algebra_json(oob), InputError);
    CHECK_THROWS_AS(load_algebra("/nonexistent/path.json"), InputError);
}
