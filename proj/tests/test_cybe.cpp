#include <catch2/catch.hpp>

#include "acyb/cybe.hpp"

using namespace acyb;

namespace {

Tensor2 t0_m2() {
    Tensor2 t(4);
    t.at(0, 1) = Scalar(1);
    t.at(1, 0) = Scalar(-1);
    return t;
}

StandardFormSeries rational_m2(const MetricHandle& m2, int trunc = 9) {
    Series2<Tensor2> tail(kExact);
    tail.set(0, 0, t0_m2());
    return StandardFormSeries(m2, 0, one_series(), tail, trunc);
}

// Independent constant evaluator: leg products written out on matrix units,
// no shared code with the production path.
Tensor3 constant_cyb_oracle(const Algebra& A, const Tensor2& t) {
    int d = A.dim();
    Tensor3 out(d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s) {
                    if (t.at(r, s).is_zero()) continue;
                    Scalar c = t.at(p, q) * t.at(r, s);
                    // t13 t12 = pr (x) s (x) q
                    Element e1 = A.mul(A.basis(p), A.basis(r));
                    for (int u = 0; u < d; ++u)
                        if (!e1[u].is_zero()) out.at(u, s, q) += c * e1[u];
                    // - t12 t23 = - p (x) qr (x) s
                    Element e2 = A.mul(A.basis(q), A.basis(r));
                    for (int u = 0; u < d; ++u)
                        if (!e2[u].is_zero()) out.at(p, u, s) -= c * e2[u];
                    // + t23 t13 = r (x) p (x) qs
                    Element e3 = A.mul(A.basis(q), A.basis(s));
                    for (int u = 0; u < d; ++u)
                        if (!e3[u].is_zero()) out.at(r, p, u) += c * e3[u];
                }
        }
    return out;
}

} // namespace

TEST_CASE("numerator identity for the simplest pole", "[cybe]") {
    // (z2 - z3) - (z1 - z3) + (z1 - z2) = 0, the scalar collapse of the
    // common-denominator numerator for lambda = 1
    Series3<Scalar> sum;
    sum.accumulate({0, 1, 0}, Scalar(1));
    sum.accumulate({0, 0, 1}, Scalar(-1));
    sum.accumulate({1, 0, 0}, Scalar(-1));
    sum.accumulate({0, 0, 1}, Scalar(1));
    sum.accumulate({1, 0, 0}, Scalar(1));
    sum.accumulate({0, 1, 0}, Scalar(-1));
    CHECK(sum.is_zero());
}

TEST_CASE("yang solution", "[cybe]") {
    MetricHandle m1 = share(matrix_algebra(1));
    StandardFormSeries yang1(m1, 0, one_series(), Series2<Tensor2>(kExact), 9);
    CHECK(cyb(yang1, 6).is_zero());
    CHECK(gcyb(yang1, 6).is_zero());

    MetricHandle m2 = share(matrix_algebra(2));
    StandardFormSeries yang2(m2, 0, one_series(), Series2<Tensor2>(kExact), 9);
    CHECK(cyb(yang2, 6).is_zero());
}

TEST_CASE("yang solution over matrix 3", "[cybe]") {
    MetricHandle m3 = share(matrix_algebra(3));
    StandardFormSeries yang(m3, 0, one_series(), Series2<Tensor2>(kExact), 9);
    CHECK(cyb(yang, 4).is_zero());
}

TEST_CASE("constant tail solution over matrix 2", "[cybe]") {
    MetricHandle m2 = share(matrix_algebra(2));
    // oracle: the constant part solves the constant equation ...
    CHECK(t_is_zero(constant_cyb_oracle(m2->algebra(), t0_m2())));
    // ... and the invariance identities kill every cross term
    Tensor2 gamma = casimir_gamma(*m2);
    for (int i = 0; i < 4; ++i) {
        Element b = m2->algebra().basis(i);
        CHECK(t_eq(act1_left(m2->algebra(), b, gamma), act2_right(m2->algebra(), gamma, b)));
    }
    // production evaluator agrees
    StandardFormSeries r = rational_m2(m2);
    CHECK(cyb(r, 6).is_zero());
    CHECK(is_skew(r));
    CHECK(gcyb(r, 6).is_zero());
}

TEST_CASE("negative control and polar defect", "[cybe]") {
    MetricHandle m2 = share(matrix_algebra(2));
    Series2<Tensor2> tail(kExact);
    Tensor2 bad(4);
    bad.at(0, 0) = Scalar(1); // e11 (x) e11
    tail.set(0, 0, bad);
    StandardFormSeries r(m2, 0, one_series(), tail, 9);
    CybResult res = cyb(r, 4);
    CHECK_FALSE(res.is_zero());
    auto fn = s3_first_nonzero(res.regular);
    REQUIRE(fn);
    CHECK(fn->first[0] + fn->first[1] + fn->first[2] == 0);
    CHECK_FALSE(res.polar.is_zero()); // non-skew input leaves a genuine pole

    // truncation guard
    StandardFormSeries shallow(m2, 0, one_series(), s2_truncate(Series2<Tensor2>(kExact), 3), 3);
    CHECK_THROWS_AS(cyb(shallow, 6), TruncationTooSmall);
}

TEST_CASE("quasi rational solution", "[cybe]") {
    MetricHandle m2 = share(matrix_algebra(2));
    Tensor2 gamma = casimir_gamma(*m2);
    Series2<Tensor2> tail(kExact);
    tail.set(0, 0, t0_m2());
    tail.set(0, 1, gamma);
    StandardFormSeries qr(m2, 2, one_series(), tail, 9);
    CHECK(cyb(qr, 6).is_zero());
    CHECK(gcyb(qr, 6).is_zero());
    CHECK(is_skew(qr));
}

TEST_CASE("series to subspace and back", "[cybe]") {
    MetricHandle m2 = share(matrix_algebra(2));

    for (int n : {0, 1, 2}) {
        StandardFormSeries plain(m2, n, one_series(), Series2<Tensor2>(kExact), 8);
        WBasis W = series_to_subspace(plain);
        CHECK(W.tail_bound == 0);
    }

    StandardFormSeries r = rational_m2(m2);
    WBasis W = series_to_subspace(r);
    REQUIRE(W.tail_bound == 1);
    // t_{0,i} are the components of t paired against b_i
    Element e11 = m2->algebra().basis(0), e12 = m2->algebra().basis(1);
    REQUIRE(W.tails[0][0].get(0));
    CHECK(*W.tails[0][0].get(0) == el_scale(Scalar(-1), e12));
    REQUIRE(W.tails[0][1].get(0));
    CHECK(*W.tails[0][1].get(0) == e11);
    CHECK(W.tails[0][2].is_zero());
    CHECK(W.tails[0][3].is_zero());

    StandardFormSeries back = subspace_to_series(W, one_series(), r.trunc);
    CHECK(back.n == r.n);
    CHECK(s2_eq(back.tail, r.tail));
    WBasis W2 = series_to_subspace(back);
    CHECK(W2.tail_bound == W.tail_bound);
    for (int k = 0; k < W.tail_bound; ++k)
        for (int i = 0; i < 4; ++i) CHECK(l1_eq(W2.tails[k][i], W.tails[k][i]));

    // tails persisting to the truncation boundary are rejected
    Series2<Tensor2> badtail(3);
    badtail.set(0, 3, t0_m2());
    StandardFormSeries nonpoly(m2, 0, one_series(), badtail, 3);
    CHECK_THROWS_AS(series_to_subspace(nonpoly), NonPolynomialTail);
}

TEST_CASE("orthogonality of A(r) and A(bar r)", "[cybe]") {
    MetricHandle m1 = share(matrix_algebra(1));
    StandardFormSeries yang(m1, 0, one_series(), Series2<Tensor2>(kExact), 9);
    CHECK(orthogonality_check(yang, ResiduePairing::standard(m1, 0), -3, 2));

    // non-skew input: A(r) pairs to zero against A(bar r) even though A(r) is
    // not isotropic
    MetricHandle m2 = share(matrix_algebra(2));
    StandardFormSeries qt(m2, 1, one_series(), Series2<Tensor2>(kExact), 9);
    ResiduePairing P1 = ResiduePairing::standard(m2, 1);
    CHECK(orthogonality_check(qt, P1, -3, 2));
    SpanReport self = wbasis_span_check(series_to_subspace(qt), P1, -3, 2);
    CHECK_FALSE(self.isotropic);

    StandardFormSeries r = rational_m2(m2);
    CHECK(orthogonality_check(r, ResiduePairing::standard(m2, 0), -3, 2));
}

TEST_CASE("gcyb pairing identity", "[cybe]") {
    // solutions: both sides vanish
    MetricHandle m2 = share(matrix_algebra(2));
    StandardFormSeries r = rational_m2(m2, 12);
    ResiduePairing P = ResiduePairing::standard(m2, 0);
    CHECK(gcyb_pairing_identity(r, P, 1));

    // scalar non-solution gamma/(x-y) + c: the identity still holds with both
    // sides nonzero for some triple
    MetricHandle m1 = share(matrix_algebra(1));
    Series2<Tensor2> ctail(kExact);
    Tensor2 c(1);
    c.at(0, 0) = Scalar(3);
    ctail.set(0, 0, c);
    StandardFormSeries rc(m1, 0, one_series(), ctail, 12);
    CHECK(gcyb_pairing_identity(rc, ResiduePairing::standard(m1, 0), 1));
    {
        WBasis W = series_to_subspace(rc);
        DnElement g0 = wbasis_generator(W, rc.lambda, 0, 0);
        ResiduePairing P1 = ResiduePairing::standard(m1, 0);
        StandardFormSeries rb = bar(rc);
        WBasis Wb = series_to_subspace(rb);
        DnElement gb = wbasis_generator(Wb, rb.lambda, 0, 0);
        CHECK_FALSE(P1.pair(gb, dn_mul(g0, g0)).is_zero()); // a genuinely nonzero side
    }

    // matrix non-solution with an x-dependent tail
    Series2<Tensor2> xt(kExact);
    Tensor2 e11e11(4);
    e11e11.at(0, 0) = Scalar(1);
    xt.set(1, 0, e11e11); // x e11 (x) e11
    StandardFormSeries rx(m2, 0, one_series(), xt, 12);
    CHECK(gcyb_pairing_identity(rx, P, 1));
    CHECK_FALSE(gcyb(rx, 3).is_zero());

    // higher pole orders
    StandardFormSeries qt(m2, 1, one_series(), Series2<Tensor2>(kExact), 12);
    CHECK(gcyb_pairing_identity(qt, ResiduePairing::standard(m2, 1), 1));
    Series2<Tensor2> qtail(kExact);
    qtail.set(0, 0, t0_m2());
    qtail.set(0, 1, casimir_gamma(*m2));
    StandardFormSeries qr(m2, 2, one_series(), qtail, 12);
    CHECK(gcyb_pairing_identity(qr, ResiduePairing::standard(m2, 2), 1));
}
