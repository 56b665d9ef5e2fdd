#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"

using namespace gk;
using gktest::Rng;

namespace {

Form dz(int n, int j) { return Form::basis_oneform(n, j); }
Form dzb(int n, int j) { return Form::basis_oneform(n, n + j); }
Polyvector dd(int n, int j) { return Polyvector::basis_vector(n, j); }

GenSection sec_v(const Polyvector& v) { return {v, Form(v.n())}; }
GenSection sec_f(const Form& f) { return {Polyvector(f.n()), f}; }

} // namespace

TEST_CASE("pairing is symmetric and bilinear") {
    Rng rng(31);
    int n = 2;
    for (int it = 0; it < 20; ++it) {
        GenSection a = rng.section(n), b = rng.section(n), c = rng.section(n);
        CHECK(pairing(a, b) == pairing(b, a));
        CHECK(pairing(a + b, c) == pairing(a, c) + pairing(b, c));
        GaussRat s = rng.gauss();
        CHECK(pairing(a.scaled(s), b) == pairing(a, b).scaled(s));
    }
    // <@1, dz1> = 1/2
    CHECK(pairing(sec_v(dd(2, 0)), sec_f(dz(2, 0))) ==
          PolyScalar::constant(2, GaussRat(Rat(1, 2))));
}

TEST_CASE("Clifford product: isotropy, anticommutation, scalars") {
    int n = 2;
    CliffordElem dz1 = CliffordElem::from_form(dz(n, 0));
    CliffordElem d1 = CliffordElem::from_polyvector(dd(n, 0));
    // dz1 . dz1 = 0
    CHECK(cl_product(dz1, dz1).is_zero());
    // @1 . dz1 + dz1 . @1 = 2<@1,dz1> = 1
    CHECK(cl_product(d1, dz1) + cl_product(dz1, d1) ==
          CliffordElem::scalar(n, GaussRat(1)));
    // scalar . x = scaled x
    CliffordElem s = CliffordElem::scalar(n, GaussRat(Rat(3, 2)));
    CHECK(cl_product(s, dz1) == dz1.scaled(GaussRat(Rat(3, 2))));

    // associativity on random words
    Rng rng(32);
    for (int it = 0; it < 20; ++it) {
        CliffordElem x = CliffordElem::from_section(rng.section(n));
        CliffordElem y = CliffordElem::from_section(rng.section(n));
        CliffordElem z = CliffordElem::from_section(rng.section(n));
        CHECK(cl_mul(cl_mul(x, y), z) == cl_mul(x, cl_mul(y, z)));
    }

    // Clifford relation in the algebra: E F + F E = 2<E,F>
    for (int it = 0; it < 20; ++it) {
        GenSection e = rng.section(n), f = rng.section(n);
        CliffordElem ce = CliffordElem::from_section(e);
        CliffordElem cf = CliffordElem::from_section(f);
        CHECK(cl_mul(ce, cf) + cl_mul(cf, ce) ==
              CliffordElem::scalar(n, pairing(e, f).scaled(GaussRat(2))));
    }

    // filtration contract of the public product
    CliffordElem b1 = CliffordElem::from_form(wedge(dz(n, 0), dzb(n, 0)));
    CliffordElem b2 = CliffordElem::from_form(wedge(dz(n, 1), dzb(n, 1)));
    CHECK_THROWS_AS((void)cl_product(b1, b2), filtration_error);
    CHECK(cl_mul(b1, b2).filtration_degree() == 4);
}

TEST_CASE("spin action: generators, words, Clifford relation") {
    int n = 2;
    // (@1 + 0) . (dz1 ^ dz2) = dz2
    CHECK(spin_action(CliffordElem::from_polyvector(dd(n, 0)), wedge(dz(n, 0), dz(n, 1))) ==
          dz(n, 1));
    // 2-form acts by wedging: b . 1 = b
    Form b = wedge(dz(n, 0), dzb(n, 1)) + wedge(dz(n, 1), dzb(n, 0)).scaled(GaussRat(Rat(2)));
    CHECK(spin_action(CliffordElem::from_form(b), Form::scalar(n, GaussRat(1))) == b);
    // 2-vector acts by contraction
    Rng rng(33);
    for (int it = 0; it < 10; ++it) {
        Polyvector beta = rng.polyvector(n, 2);
        Form phi = rng.mixed_form(n, 3);
        CHECK(spin_action(CliffordElem::from_polyvector(beta), phi) == contract(beta, phi));
    }
    // representation property: spin(x y, phi) = spin(x, spin(y, phi))
    for (int it = 0; it < 20; ++it) {
        CliffordElem x = CliffordElem::from_section(rng.section(n));
        CliffordElem y = CliffordElem::from_form(rng.form(n, 2));
        Form phi = rng.mixed_form(n, 2);
        CHECK(spin_action(cl_mul(x, y), phi) == spin_action(x, spin_action(y, phi)));
        CliffordElem w = CliffordElem::from_polyvector(rng.polyvector(n, 2));
        CHECK(spin_action(cl_mul(w, x), phi) == spin_action(w, spin_action(x, phi)));
    }
    // (E1 E2 + E2 E1) . phi = 2<E1,E2> phi on 100 random cases
    for (int it = 0; it < 100; ++it) {
        GenSection e1 = rng.section(n), e2 = rng.section(n);
        Form phi = rng.mixed_form(n, 2, 2);
        CliffordElem c1 = CliffordElem::from_section(e1);
        CliffordElem c2 = CliffordElem::from_section(e2);
        Form lhs = spin_action(c1, spin_action(c2, phi)) +
                   spin_action(c2, spin_action(c1, phi));
        CHECK(lhs == phi.scaled(pairing(e1, e2).scaled(GaussRat(2))));
    }
}

TEST_CASE("exponentials in the spin representation") {
    int n = 2;
    // e^{i omega} . 1 = sum (i omega)^k / k!
    Form iw = Form::omega_std(n).scaled(GaussRat::i());
    Form psi = exp_action(CliffordElem::from_form(Form::omega_std(n)).scaled(GaussRat::i()),
                          Form::scalar(n, GaussRat(1)));
    Form expected = Form::scalar(n, GaussRat(1)) + iw +
                    wedge(iw, iw).scaled(GaussRat(Rat(1, 2)));
    CHECK(psi == expected);
    CHECK(psi == wedge_exp(iw));

    Rng rng(34);
    // e^0 phi = phi; e^b e^{-b} phi = phi
    for (int it = 0; it < 10; ++it) {
        Form phi = rng.mixed_form(n, 3);
        CHECK(exp_action(CliffordElem(n), phi) == phi);
        Form b = rng.form(n, 2);
        CliffordElem cb = CliffordElem::from_form(b);
        CHECK(exp_action(cb, exp_action(-cb, phi)) == phi);
        Polyvector v = rng.polyvector(n, 2);
        CliffordElem cv = CliffordElem::from_polyvector(v);
        CHECK(exp_action(cv, exp_action(-cv, phi)) == phi);
    }
}

TEST_CASE("adjoint action on sections") {
    int n = 2;
    Rng rng(35);
    // Ad_{e^0} = id
    for (int it = 0; it < 5; ++it) {
        GenSection e = rng.section(n);
        CHECK(adjoint_on_section(CliffordElem(n), e) == e);
    }
    // 2-form exponential: Ad_{e^b}(v + theta) = v + theta - i_v b
    // (the sign compatible with b acting by wedge; interior-product oracle)
    Form b = wedge(dz(n, 0), dzb(n, 0));
    GenSection d1 = sec_v(dd(n, 0));
    GenSection got = adjoint_on_section(CliffordElem::from_form(b), d1);
    GenSection expect = d1 - sec_f(interior(dd(n, 0), b));
    CHECK(got == expect);
    CHECK(got.one == -dzb(n, 0)); // i_{@1}(dz1 ^ dzb1) = dzb1
    for (int it = 0; it < 10; ++it) {
        Form bb = rng.form(n, 2);
        GenSection e = rng.section(n);
        CHECK(adjoint_on_section(CliffordElem::from_form(bb), e) ==
              e - sec_f(interior(e.vec, bb)));
    }
    // 2-vector exponential: Ad_{e^beta}(v + theta) = v + i_theta(beta) + theta
    Polyvector beta = pv_wedge(dd(n, 0), dd(n, 1));
    GenSection gdz = sec_f(dz(n, 0));
    CHECK(adjoint_on_section(CliffordElem::from_polyvector(beta), gdz) ==
          gdz + sec_v(bivector_on_oneform(beta, dz(n, 0))));
    CHECK(bivector_on_oneform(beta, dz(n, 0)) == dd(n, 1));
    for (int it = 0; it < 10; ++it) {
        Polyvector bv = rng.polyvector(n, 2);
        GenSection e = rng.section(n);
        CHECK(adjoint_on_section(CliffordElem::from_polyvector(bv), e) ==
              e + sec_v(bivector_on_oneform(bv, e.one)));
    }
    // Ad preserves the pairing
    for (int it = 0; it < 20; ++it) {
        CliffordElem x = rng.irange(0, 1)
                             ? CliffordElem::from_form(rng.form(n, 2))
                             : CliffordElem::from_polyvector(rng.polyvector(n, 2));
        GenSection e1 = rng.section(n), e2 = rng.section(n);
        CHECK(pairing(adjoint_on_section(x, e1), adjoint_on_section(x, e2)) ==
              pairing(e1, e2));
    }
    // compatibility with the spin action: (Ad_{e^x} E) . (e^x phi) = e^x (E . phi)
    for (int it = 0; it < 20; ++it) {
        CliffordElem x = rng.irange(0, 1)
                             ? CliffordElem::from_form(rng.form(n, 2))
                             : CliffordElem::from_polyvector(rng.polyvector(n, 2));
        GenSection e = rng.section(n);
        Form phi = rng.mixed_form(n, 2, 2);
        Form lhs = spin_action(CliffordElem::from_section(adjoint_on_section(x, e)),
                               exp_action(x, phi));
        Form rhs = exp_action(x, spin_action(CliffordElem::from_section(e), phi));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bch_log composes exponentials") {
    int n = 2;
    int T = 2;
    Polyvector beta = pv_wedge(dd(n, 0), dd(n, 1));
    Polyvector a_pv = beta + beta.conj();
    CliffordElem a = CliffordElem::from_polyvector(a_pv);

    SUBCASE("second exponent zero: z = a t") {
        CliffordSeries g2 = cl_series_zero(T, n);
        CliffordSeries z = bch_log(a, g2, T);
        CHECK(z.c[0].is_zero());
        CHECK(z.c[1] == a);
        CHECK(z.c[2].is_zero());
    }

    SUBCASE("commuting exponents add") {
        // b(t) = c * omega t with c scalar: a 2-form commuting check is not
        // generally true, so use a multiple of a itself.
        CliffordSeries g2 = cl_series_zero(T, n);
        g2.c[1] = a.scaled(GaussRat(Rat(1, 3)));
        CliffordSeries z = bch_log(a, g2, T);
        CHECK(z.c[1] == a.scaled(GaussRat(Rat(4, 3))));
        CHECK(z.c[2].is_zero());
    }

    SUBCASE("generic order 2: z = a t + b1 t + [a,b1] t^2 / 2, checked by action") {
        Form b1f = wedge(dz(n, 0), dzb(n, 0)).scaled(PolyScalar::variable(n, 1));
        CliffordElem b1 = CliffordElem::from_form(b1f);
        CliffordSeries g2 = cl_series_zero(T, n);
        g2.c[1] = b1;
        CliffordSeries z = bch_log(a, g2, T);
        CHECK(z.c[1] == a + b1);
        CHECK(z.c[2] == cl_commutator(a, b1).scaled(GaussRat(Rat(1, 2))));
        for (auto& c : z.c) CHECK(c.in_cl2());

        // exponential-composition oracle on 10 random forms
        Rng rng(36);
        for (int it = 0; it < 10; ++it) {
            FormSeries phi = form_series_zero(T, n);
            phi.c[0] = rng.mixed_form(n, 2, 2);
            CliffordSeries at = cl_series_zero(T, n);
            at.c[1] = a;
            FormSeries rhs = spin_series_exp_apply(at, spin_series_exp_apply(g2, phi));
            FormSeries lhs = spin_series_exp_apply(z, phi);
            CHECK(lhs == rhs);
        }
    }

    SUBCASE("order cap") {
        CHECK_THROWS_AS((void)bch_log(a, cl_series_zero(7, n), 7), error);
    }
}
