#include <catch2/catch.hpp>

#include "acyb/cybe.hpp"

using namespace acyb;

namespace {

Tensor2 t0_m2() { // e11 (x) e12 - e12 (x) e11
    Tensor2 t(4);
    t.at(0, 1) = Scalar(1);
    t.at(1, 0) = Scalar(-1);
    return t;
}

} // namespace

TEST_CASE("normalize type", "[standard_form]") {
    MetricHandle m2 = share(matrix_algebra(2));
    Tensor2 gamma = casimir_gamma(*m2);

    Series2<Scalar> a;
    a.set(0, 0, Scalar(1));
    StandardFormSeries r = normalize_type(m2, a, Series2<Tensor2>(kExact));
    CHECK(r.n == 0);
    CHECK(s1_eq(r.lambda, one_series()));
    CHECK(r.tail.is_zero());

    Series2<Scalar> ax; // a(x,y) = x
    ax.set(1, 0, Scalar(1));
    StandardFormSeries rx = normalize_type(m2, ax, Series2<Tensor2>(kExact));
    CHECK(rx.n == 1);
    CHECK(s1_eq(rx.lambda, one_series()));
    REQUIRE(rx.tail.get(0, 0));
    CHECK(t_eq(*rx.tail.get(0, 0), gamma)); // x gamma/(x-y) = y gamma/(x-y) + gamma
    CHECK(rx.tail.terms.size() == 1);

    Series2<Scalar> axy; // a(x,y) = xy
    axy.set(1, 1, Scalar(1));
    Series2<Tensor2> s0(kExact);
    s0.set(0, 0, t0_m2());
    StandardFormSeries rq = normalize_type(m2, axy, s0);
    CHECK(rq.n == 2);
    CHECK(s1_eq(rq.lambda, one_series()));
    REQUIRE(rq.tail.get(0, 1));
    CHECK(t_eq(*rq.tail.get(0, 1), gamma)); // tail y gamma + t0
    CHECK(t_eq(*rq.tail.get(0, 0), t0_m2()));

    Series2<Scalar> degenerate; // vanishes on the diagonal
    degenerate.set(1, 0, Scalar(1));
    degenerate.set(0, 1, Scalar(-1));
    CHECK_THROWS_AS(normalize_type(m2, degenerate, Series2<Tensor2>(kExact)), DiagonalVanishes);
}

TEST_CASE("bar and skew detection", "[standard_form]") {
    MetricHandle m2 = share(matrix_algebra(2));
    Tensor2 gamma = casimir_gamma(*m2);

    StandardFormSeries yang(m2, 0, one_series(), Series2<Tensor2>(kExact), 8);
    StandardFormSeries ybar = bar(yang);
    CHECK(ybar.n == 0);
    CHECK(ybar.tail.is_zero());
    CHECK(is_skew(yang));

    StandardFormSeries qt(m2, 1, one_series(), Series2<Tensor2>(kExact), 8);
    StandardFormSeries qtbar = bar(qt);
    CHECK(qtbar.n == 1);
    REQUIRE(qtbar.tail.get(0, 0));
    CHECK(t_eq(*qtbar.tail.get(0, 0), gamma)); // bar(y gamma/(x-y)) = y gamma/(x-y) + gamma
    CHECK_FALSE(is_skew(qt));

    Series2<Tensor2> qrt(kExact); // xy gamma/(x-y) + t0 as a type (2,1) series
    qrt.set(0, 0, t0_m2());
    qrt.set(0, 1, gamma);
    StandardFormSeries qr(m2, 2, one_series(), qrt, 9);
    CHECK(is_skew(qr));

    // bar is an involution
    StandardFormSeries qtbb = bar(qtbar);
    CHECK(qtbb.n == qt.n);
    CHECK(s2_eq(qtbb.tail, qt.tail));
    CHECK(s1_eq(qtbb.lambda, qt.lambda));
}

TEST_CASE("emitters", "[standard_form]") {
    MetricHandle m2 = share(matrix_algebra(2));
    Tensor2 gamma = casimir_gamma(*m2);

    StandardFormSeries rat = emit_rational(m2, Series2<Tensor2>(kExact), 8);
    CHECK(rat.n == 0);
    CHECK(rat.tail.is_zero());
    CHECK(emit_quasi_trigonometric(m2, Series2<Tensor2>(kExact), 8).n == 1);
    CHECK(emit_quasi_rational(m2, Series2<Tensor2>(kExact), 8).n == 2);

    // m = 1: e^{x-y} gamma/(e^{x-y} - 1) = gamma/(x-y) + gamma/2 + (x-y)gamma/12 - ...
    TrigFormData data;
    data.m = 1;
    data.sigma = mat_identity(4);
    data.eps = Scalar(1);
    data.gammas = {gamma};
    StandardFormSeries trig = emit_trigonometric(m2, data, 6);
    CHECK(trig.n == 0);
    CHECK(s1_eq(trig.lambda, one_series()));
    REQUIRE(trig.tail.get(0, 0));
    CHECK(t_eq(*trig.tail.get(0, 0), t_scale(Scalar(1, 2), gamma)));
    CHECK(t_eq(*trig.tail.get(1, 0), t_scale(Scalar(1, 12), gamma)));
    CHECK(t_eq(*trig.tail.get(0, 1), t_scale(Scalar(-1, 12), gamma)));
    CHECK(trig.tail.get(2, 0) == nullptr); // (x-y)^2 coefficient vanishes
    CHECK(t_eq(*trig.tail.get(3, 0), t_scale(Scalar(-1, 720), gamma)));

    // eigencomponent validation
    TrigFormData bad = data;
    bad.gammas = {t_scale(Scalar(2), gamma)};
    CHECK_THROWS_AS(emit_trigonometric(m2, bad, 4), EigencomponentMismatch);

    // m = 2 with the inner automorphism Ad(diag(1,-1)): e12, e21 flip sign
    TrigFormData d2;
    d2.m = 2;
    d2.sigma = mat_identity(4);
    d2.sigma[1][1] = Scalar(-1);
    d2.sigma[2][2] = Scalar(-1);
    d2.eps = Scalar(-1);
    Tensor2 g0(4), g1(4);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            if (gamma.at(p, q).is_zero()) continue;
            if (p == 1 || p == 2)
                g1.at(p, q) = gamma.at(p, q);
            else
                g0.at(p, q) = gamma.at(p, q);
        }
    d2.gammas = {g0, g1};
    StandardFormSeries trig2 = emit_trigonometric(m2, d2, 4);
    CHECK(trig2.n == 0);

    TrigFormData swapped = d2; // wrong eigenvalue assignment
    std::swap(swapped.gammas[0], swapped.gammas[1]);
    CHECK_THROWS_AS(emit_trigonometric(m2, swapped, 4), EigencomponentMismatch);

    // the loop tail t(e^{x/m}, e^{y/m}) folds into the regular part
    TrigFormData with_tail = data;
    with_tail.loop_tail[{1, -1}] = t0_m2(); // w1 w2^{-1}
    StandardFormSeries trig3 = emit_trigonometric(m2, with_tail, 4);
    REQUIRE(trig3.tail.get(0, 0));
    CHECK(t_eq(*trig3.tail.get(0, 0), t_add(t_scale(Scalar(1, 2), gamma), t0_m2())));
    REQUIRE(trig3.tail.get(1, 1)); // coefficient (1)(-1) t0 from e^x e^{-y}
    CHECK(t_eq(*trig3.tail.get(1, 1), t_scale(Scalar(-1), t0_m2())));
}

TEST_CASE("trigonometric emitter over a cyclotomic field", "[standard_form]") {
    // sigma = Ad(diag(1, i)) has order 4; e12 and e21 pick up eigenvalues
    // -i and i, so the eigencomponents live over Q(zeta_4)
    MetricHandle m2 = share(matrix_algebra(2));
    Tensor2 gamma = casimir_gamma(*m2);
    Scalar i = primitive_root(4);
    TrigFormData d4;
    d4.m = 4;
    d4.sigma = mat_identity(4);
    d4.sigma[1][1] = -i; // e12 -> -i e12
    d4.sigma[2][2] = i;  // e21 -> i e21
    d4.eps = i;
    Tensor2 g0(4), g1(4), g2(4), g3(4);
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) {
            const Scalar& c = gamma.at(p, q);
            if (c.is_zero()) continue;
            if (p == 1)
                g3.at(p, q) = c; // eigenvalue -i = eps^3
            else if (p == 2)
                g1.at(p, q) = c; // eigenvalue i = eps
            else
                g0.at(p, q) = c;
        }
    d4.gammas = {g0, g1, g2, g3};
    StandardFormSeries trig = emit_trigonometric(m2, d4, 4);
    CHECK(trig.n == 0);
    CHECK(s1_eq(trig.lambda, one_series()));
    // the eigencomponent validation ran over Q(zeta_4): sigma itself is
    // cyclotomic, while the expanded coefficients stay rational
    CHECK_FALSE(d4.sigma[1][1].is_rational());
    for (const auto& [e, T] : trig.tail.terms)
        for (const auto& c : T.v) CHECK(c.is_rational());
    // the constant term splits gamma over the four exponent factors
    REQUIRE(trig.tail.get(0, 0));
    CHECK_FALSE(t_eq(*trig.tail.get(0, 0), t_scale(Scalar(1, 2), gamma)));
    // not a solution (no trigonometric solutions over matrix algebras)
    CHECK_FALSE(cyb(trig, 2).is_zero());
    // a broken eigenvalue assignment over the cyclotomic field is caught
    TrigFormData wrong = d4;
    std::swap(wrong.gammas[1], wrong.gammas[3]);
    CHECK_THROWS_AS(emit_trigonometric(m2, wrong, 4), EigencomponentMismatch);
}

TEST_CASE("gauge transform", "[standard_form]") {
    MetricHandle m1 = share(matrix_algebra(1));
    StandardFormSeries yang(m1, 0, one_series(), Series2<Tensor2>(kExact), 10);

    GaugeData idg;
    idg.phi.assign(1, {one_series()});
    idg.u = poly_z();
    StandardFormSeries same = gauge_transform(yang, idg, 6);
    CHECK(same.n == 0);
    CHECK(s1_eq(same.lambda, one_series()));
    CHECK(same.tail.is_zero());

    GaugeData dbl = idg; // u = 2z
    dbl.u = s1_scale(Scalar(2), poly_z());
    StandardFormSeries half = gauge_transform(yang, dbl, 6);
    CHECK(half.n == 0);
    REQUIRE(half.lambda.get(0));
    CHECK(*half.lambda.get(0) == Scalar(1, 2)); // type (0, 1/2)
    CHECK(half.tail.is_zero());

    // conjugation by diag(1,2) on M_2 preserves solutions
    MetricHandle m2 = share(matrix_algebra(2));
    Series2<Tensor2> tail(kExact);
    Tensor2 t0(4);
    t0.at(0, 1) = Scalar(1);
    t0.at(1, 0) = Scalar(-1);
    tail.set(0, 0, t0);
    StandardFormSeries rat(m2, 0, one_series(), tail, 8);
    GaugeData conj;
    conj.u = poly_z();
    conj.phi.assign(4, std::vector<Series1<Scalar>>(4));
    conj.phi[0][0] = one_series();
    conj.phi[3][3] = one_series();
    Series1<Scalar> halfc, two;
    halfc.set(0, Scalar(1, 2));
    two.set(0, Scalar(2));
    conj.phi[1][1] = halfc; // e12 -> e12/2
    conj.phi[2][2] = two;   // e21 -> 2 e21
    StandardFormSeries moved = gauge_transform(rat, conj, 6);
    CHECK(cyb(moved, 4).is_zero());
    CHECK_FALSE(s2_eq(moved.tail, rat.tail)); // genuinely moved

    // a non-multiplicative phi is rejected
    GaugeData broken = conj;
    broken.phi[0][0] = two;
    CHECK_THROWS_AS(gauge_transform(rat, broken, 4), ParameterMismatch);
}
