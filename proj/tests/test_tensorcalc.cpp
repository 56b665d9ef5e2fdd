#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"

using namespace gk;
using gktest::Rng;

namespace {

Form dz(int n, int j) { return Form::basis_oneform(n, j); } // j 0-based
Form dzb(int n, int j) { return Form::basis_oneform(n, n + j); }
Polyvector dd(int n, int j) { return Polyvector::basis_vector(n, j); }
PolyScalar z(int n, int j) { return PolyScalar::variable(n, j); }

} // namespace

TEST_CASE("wedge graded commutativity and signs") {
    Rng rng(21);
    int n = 3;
    for (int it = 0; it < 30; ++it) {
        int da = rng.irange(0, 3), db = rng.irange(0, 3);
        Form a = rng.form(n, da), b = rng.form(n, db);
        Form ab = wedge(a, b), ba = wedge(b, a);
        CHECK(ab == ((da * db) % 2 ? -ba : ba));
    }
    // dzb1 ^ dz1 = -dz1 ^ dzb1
    CHECK(wedge(dzb(2, 0), dz(2, 0)) == -wedge(dz(2, 0), dzb(2, 0)));
}

TEST_CASE("exterior_d examples and derivation rule") {
    int n = 2;
    // d(z1 dz2) = dz1 ^ dz2
    Form f = dz(n, 1).scaled(z(n, 0));
    CHECK(exterior_d(f) == wedge(dz(n, 0), dz(n, 1)));
    // d of a constant-coefficient form is 0
    CHECK(exterior_d(wedge(dz(n, 0), dzb(n, 1))).is_zero());
    // sign oracle from component expansion: d(zb1 dz1) = dzb1 ^ dz1 = -dz1 ^ dzb1
    Form g = dz(n, 0).scaled(z(n, 2));
    CHECK(exterior_d(g) == -wedge(dz(n, 0), dzb(n, 0)));

    Rng rng(22);
    for (int it = 0; it < 20; ++it) {
        int da = rng.irange(0, 2);
        Form a = rng.form(n, da), b = rng.form(n, rng.irange(0, 2));
        Form lhs = exterior_d(wedge(a, b));
        Form rhs = wedge(exterior_d(a), b) +
                   (da % 2 ? -wedge(a, exterior_d(b)) : wedge(a, exterior_d(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d^2 = 0 and the bidegree splitting identities") {
    Rng rng(23);
    int n = 3;
    for (int it = 0; it < 50; ++it) {
        Form a = rng.mixed_form(n, 3);
        CHECK(exterior_d(exterior_d(a)).is_zero());
        CHECK(del(del(a)).is_zero());
        CHECK(delbar(delbar(a)).is_zero());
        CHECK((del(delbar(a)) + delbar(del(a))).is_zero());
        CHECK(exterior_d(a) == del(a) + delbar(a));
    }
}

TEST_CASE("interior product: examples and anti-derivation") {
    int n = 2;
    // i_{@1}(dz1 ^ dz2) = dz2
    CHECK(interior(dd(n, 0), wedge(dz(n, 0), dz(n, 1))) == dz(n, 1));
    // contraction convention: contract(@1^^@2, dz1^^dz2) = +1
    Polyvector b12 = pv_wedge(dd(n, 0), dd(n, 1));
    CHECK(contract(b12, wedge(dz(n, 0), dz(n, 1))) == Form::scalar(n, GaussRat(1)));
    // no matching legs
    CHECK(contract(b12, wedge(dzb(n, 0), dzb(n, 1))).is_zero());
    // nested-interior oracle: contract(u^v, .) = i_v(i_u(.)) on random forms
    Rng rng(24);
    for (int it = 0; it < 20; ++it) {
        Polyvector u = rng.polyvector(n, 1), v = rng.polyvector(n, 1);
        Form f = rng.mixed_form(n, 3);
        CHECK(contract(pv_wedge(u, v), f) == interior(v, interior(u, f)));
    }
    // anti-derivation of i_v
    for (int it = 0; it < 20; ++it) {
        Polyvector v = rng.polyvector(n, 1);
        int da = rng.irange(0, 2);
        Form a = rng.form(n, da), b = rng.form(n, rng.irange(0, 2));
        Form lhs = interior(v, wedge(a, b));
        Form rhs = wedge(interior(v, a), b) +
                   (da % 2 ? -wedge(a, interior(v, b)) : wedge(a, interior(v, b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Lie derivative with the Cartan formula as independent oracle") {
    int n = 2;
    // L_{@1}(z1 dz2) = dz2
    CHECK(lie_derivative(dd(n, 0), dz(n, 1).scaled(z(n, 0))) == dz(n, 1));
    // L of a constant form along a constant field vanishes
    CHECK(lie_derivative(dd(n, 1), wedge(dz(n, 0), dzb(n, 1))).is_zero());
    // L_{z1 @1}(dz1) = dz1
    Polyvector z1d1 = Polyvector::monomial(n, 1, z(n, 0));
    CHECK(lie_derivative(z1d1, dz(n, 0)) == dz(n, 0));

    Rng rng(25);
    for (int it = 0; it < 50; ++it) {
        Polyvector v = rng.polyvector(n, 1);
        Form f = rng.mixed_form(n, 3);
        Form cartan = interior(v, exterior_d(f)) + exterior_d(interior(v, f));
        CHECK(lie_derivative(v, f) == cartan);
    }
}

TEST_CASE("Schouten bracket: frozen example, antisymmetry, Jacobi") {
    int n = 3;
    Polyvector c = pv_wedge(dd(n, 0), dd(n, 1));
    CHECK(schouten(c, c).is_zero());

    // beta_f for f = z1 z2 z3: f1 @2^@3 + f2 @3^@1 + f3 @1^@2 is Poisson
    PolyScalar f = z(n, 0) * z(n, 1) * z(n, 2);
    Polyvector beta_f(n);
    beta_f += Polyvector::monomial(n, 0b110, f.derivative(0));
    beta_f += Polyvector::monomial(n, 0b101, -f.derivative(1)); // @3^@1 = -(@1^@3)
    beta_f += Polyvector::monomial(n, 0b011, f.derivative(2));
    CHECK(is_poisson(beta_f));
    // and it annihilates df
    CHECK(bivector_on_oneform(beta_f, differential(f)).is_zero());

    // componentwise expansion oracle, via [u^v,w] = u^[v,w] + [u,w]^v and
    // Leibniz in the second slot: [z2 @1^@2, @2^@3] = -(@1^@2^@3)
    Polyvector p = Polyvector::monomial(n, 0b011, z(n, 1));
    Polyvector q = Polyvector::monomial(n, 0b110, PolyScalar::one(n));
    CHECK(schouten(p, q) == -Polyvector::monomial(n, 0b111, PolyScalar::one(n)));
    // decomposable oracle: [@1^@2, z1 @3] = [@1,z1 @3]^@2 = @3^@2 = -(@2^@3)
    CHECK(schouten(pv_wedge(dd(n, 0), dd(n, 1)), Polyvector::monomial(n, 0b100, z(n, 0))) ==
          -pv_wedge(dd(n, 1), dd(n, 2)));

    // degree-1 case is the Lie bracket: [z1 @1, @1] = -@1
    CHECK(schouten(Polyvector::monomial(n, 0b001, z(n, 0)), dd(n, 0)) == -dd(n, 0));

    Rng rng(26);
    for (int it = 0; it < 20; ++it) {
        int dp = rng.irange(1, 2), dq = rng.irange(1, 2);
        Polyvector P = rng.polyvector(n, dp), Q = rng.polyvector(n, dq);
        Polyvector lhs = schouten(P, Q);
        Polyvector rhs = schouten(Q, P);
        int sign = ((dp - 1) * (dq - 1)) % 2 ? 1 : -1;
        CHECK(lhs == (sign > 0 ? rhs : -rhs));
    }

    // graded Jacobi on degree (1,2,2):
    // [P,[Q,R]] = [[P,Q],R] + (-1)^{(p-1)(q-1)} [Q,[P,R]]
    for (int it = 0; it < 12; ++it) {
        Polyvector P = rng.polyvector(n, 1, 2, 1);
        Polyvector Q = rng.polyvector(n, 2, 2, 1);
        Polyvector R = rng.polyvector(n, 2, 2, 1);
        Polyvector lhs = schouten(P, schouten(Q, R));
        Polyvector rhs = schouten(schouten(P, Q), R) + schouten(Q, schouten(P, R));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Poisson bracket convention, Leibniz, Jacobi") {
    int n = 3;
    Polyvector b12 = pv_wedge(dd(n, 0), dd(n, 1));
    CHECK(poisson_bracket(b12, z(n, 0), z(n, 1)) == PolyScalar::one(n));
    Rng rng(27);
    for (int it = 0; it < 10; ++it) {
        PolyScalar f = rng.poly(n);
        CHECK(poisson_bracket(b12, f, f).is_zero());
    }
    Polyvector zb12 = Polyvector::monomial(n, 0b011, z(n, 0));
    CHECK(poisson_bracket(zb12, z(n, 0), z(n, 1)) == z(n, 0));

    Polyvector beta = Polyvector::monomial(n, 0b011, rng.holo_poly(n));
    REQUIRE(is_poisson(beta));
    for (int it = 0; it < 10; ++it) {
        PolyScalar f = rng.poly(n), g = rng.poly(n), h = rng.poly(n);
        CHECK(poisson_bracket(beta, f, g * h) ==
              poisson_bracket(beta, f, g) * h + g * poisson_bracket(beta, f, h));
        PolyScalar jac = poisson_bracket(beta, f, poisson_bracket(beta, g, h)) +
                         poisson_bracket(beta, g, poisson_bracket(beta, h, f)) +
                         poisson_bracket(beta, h, poisson_bracket(beta, f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("Lefschetz contraction") {
    int n = 3;
    Form w = Form::omega_std(n);
    CHECK(lefschetz_contract(w) == PolyScalar::constant(n, GaussRat(3)));
    CHECK(lefschetz_contract(wedge(dz(n, 0), dzb(n, 1))).is_zero());
    CHECK(lefschetz_contract(Form(n)).is_zero());
    CHECK_THROWS_AS((void)lefschetz_contract(wedge(dz(n, 0), dz(n, 1))), error);
    // trace against a nonstandard constant (1,1) form
    Form w2 = w + wedge(dz(n, 0), dzb(n, 1)).scaled(GaussRat(Rat(1, 3))) +
              wedge(dz(n, 1), dzb(n, 0)).scaled(GaussRat(Rat(1, 3)));
    CHECK(lefschetz_contract(w2, &w2) == PolyScalar::constant(n, GaussRat(3)));
}

TEST_CASE("homotopy operator: dK + Kd = id on positive degree") {
    Rng rng(28);
    int n = 2;
    for (int it = 0; it < 50; ++it) {
        int deg = rng.irange(1, 3);
        Form f = rng.form(n, deg, 3, 3);
        Form lhs = exterior_d(homotopy(f)) + homotopy(exterior_d(f));
        CHECK(lhs == f);
    }
    // verified primitive of dz1 ^ dzb1
    Form f = wedge(dz(n, 0), dzb(n, 0));
    Form a = homotopy_primitive(f);
    CHECK(exterior_d(a) == f);
    CHECK(homotopy_primitive(Form(n)).is_zero());
    // random closed polynomial 2-forms
    for (int it = 0; it < 20; ++it) {
        Form c = exterior_d(rng.form(n, 1, 3, 3));
        Form prim = homotopy_primitive(c);
        CHECK(exterior_d(prim) == c);
    }
    CHECK_THROWS_AS((void)homotopy_primitive(dz(n, 0).scaled(z(n, 2))), error);
}

TEST_CASE("conjugation is an involutive anti-homomorphism") {
    Rng rng(29);
    int n = 2;
    for (int it = 0; it < 20; ++it) {
        Form a = rng.mixed_form(n, 2), b = rng.mixed_form(n, 2);
        CHECK(a.conj().conj() == a);
        CHECK(wedge(a, b).conj() == wedge(a.conj(), b.conj()));
        CHECK(exterior_d(a).conj() == exterior_d(a.conj()));
        Polyvector P = rng.polyvector(n, 2);
        CHECK(P.conj().conj() == P);
    }
    CHECK(Form::omega_std(n).is_real());
}
