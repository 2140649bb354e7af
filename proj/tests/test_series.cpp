#include <catch2/catch.hpp>

#include "acyb/series.hpp"

using namespace acyb;

namespace {

Series1<Scalar> poly1(std::initializer_list<std::pair<int, Scalar>> cs) {
    Series1<Scalar> f; // exact
    for (auto& [e, c] : cs) f.set(e, c);
    return f;
}

struct Rng {
    unsigned long long s = 0x9E3779B97F4A7C15ULL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
};

// Independent oracle for the Bernoulli numbers: sum_{j<k} C(k+1,j) B_j = -C(k+1,k) B_k... solved
// from sum_{j=0}^{k} C(k+1,j) B_j = 0 for k >= 1, B_0 = 1.
std::vector<mpq_class> bernoulli_numbers(int count) {
    std::vector<mpq_class> B(count);
    B[0] = 1;
    for (int k = 1; k < count; ++k) {
        mpq_class acc = 0;
        mpz_class binom = 1; // C(k+1, 0)
        for (int j = 0; j < k; ++j) {
            acc += mpq_class(binom) * B[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        B[k] = -acc / mpq_class(binom); // binom == C(k+1, k) = k+1
    }
    return B;
}

} // namespace

TEST_CASE("series products", "[series]") {
    auto f = poly1({{0, Scalar(1)}, {1, Scalar(1)}});
    auto g = poly1({{0, Scalar(1)}, {1, Scalar(-1)}});
    auto fg = s1_truncate(s1_mul(f, g), 2);
    CHECK(s1_eq(fg, poly1({{0, Scalar(1)}, {2, Scalar(-1)}})));

    Laurent1<Scalar> zi(-1, kExact), z(1, kExact);
    zi.set(-1, Scalar(1));
    z.set(1, Scalar(1));
    auto one = l1_mul(zi, z, [](const Scalar& a, const Scalar& b) { return a * b; });
    CHECK(one.get(0));
    CHECK(*one.get(0) == Scalar(1));

    // coefficient space with an algebra product: (e11 x) (e12 y) = e12 xy
    MetricAlgebra M = matrix_algebra(2);
    Series2<Element> u, v;
    u.set(1, 0, M.algebra().basis(0));
    v.set(0, 1, M.algebra().basis(1));
    auto w = s2_mul(u, v, [&](const Element& a, const Element& b) { return M.algebra().mul(a, b); });
    REQUIRE(w.get(1, 1));
    CHECK(*w.get(1, 1) == M.algebra().basis(1));
}

TEST_CASE("truncation bookkeeping is conservative", "[series]") {
    Series1<Scalar> f(3); // known through degree 3 only
    f.set(0, Scalar(1));
    auto g = poly1({{2, Scalar(1)}}); // exact z^2
    auto prod = s1_mul(f, g, [](const Scalar& a, const Scalar& b) { return a * b; });
    CHECK(prod.trunc == 5); // min(3 + 2, exact + 0)
    auto sum = s1_add(f, g);
    CHECK(sum.trunc == 3);
}

TEST_CASE("invert unit", "[series]") {
    CHECK(s1_eq(invert_unit(poly1({{0, Scalar(1)}}), 5), poly1({{0, Scalar(1)}})));
    auto geo = invert_unit(poly1({{0, Scalar(1)}, {1, Scalar(-1)}}), 3);
    CHECK(s1_eq(geo, poly1({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}, {3, Scalar(1)}})));
    auto e2 = invert_unit(poly1({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1, 2)}}), 2);
    CHECK(s1_eq(e2, poly1({{0, Scalar(1)}, {1, Scalar(-1)}, {2, Scalar(1, 2)}})));
    CHECK_THROWS_AS(invert_unit(poly1({{1, Scalar(1)}}), 3), NotAUnit);
}

TEST_CASE("substitute", "[series]") {
    auto f = poly1({{2, Scalar(1)}});
    auto u = poly1({{1, Scalar(2)}});
    CHECK(s1_eq(substitute(f, u, 4), poly1({{2, Scalar(4)}})));

    auto geo = invert_unit(poly1({{0, Scalar(1)}, {1, Scalar(-1)}}), 4); // 1/(1-z) through z^4
    auto comp = substitute(geo, poly1({{2, Scalar(1)}}), 4);
    CHECK(s1_eq(s1_truncate(comp, 4), poly1({{0, Scalar(1)}, {2, Scalar(1)}, {4, Scalar(1)}})));

    auto ez = exp_series(3);
    auto got = substitute(ez, poly1({{1, Scalar(1)}, {2, Scalar(1)}}), 3);
    CHECK(s1_eq(got, poly1({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(3, 2)}, {3, Scalar(7, 6)}})));

    CHECK_THROWS_AS(substitute(f, poly1({{0, Scalar(1)}}), 3), NonvanishingConstantTerm);

    // associativity with composition on random compatible triples
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        Series1<Scalar> a(6), u1(6), u2(6);
        for (int e = 0; e <= 6; ++e) a.set(e, Scalar(rng.next(-4, 4)));
        for (int e = 1; e <= 6; ++e) {
            u1.set(e, Scalar(rng.next(-3, 3)));
            u2.set(e, Scalar(rng.next(-3, 3)));
        }
        if (!u1.get(1)) u1.set(1, Scalar(1));
        auto lhs = substitute(substitute(a, u1, 6), u2, 6);
        auto rhs = substitute(a, substitute(u1, u2, 6), 6);
        CHECK(s1_eq(lhs, rhs));
    }
}

TEST_CASE("exp and bernoulli expansions", "[series]") {
    CHECK(s1_eq(exp_series(2), poly1({{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1, 2)}})));

    auto bern = bernoulli_expansion(10);
    CHECK(*bern.get(-1) == Scalar(1));
    CHECK(*bern.get(0) == Scalar(-1, 2));
    CHECK(*bern.get(1) == Scalar(1, 12));
    CHECK(bern.get(2) == nullptr);
    CHECK(*bern.get(3) == Scalar(-1, 720));

    // oracle: coefficient of z^{k-1} is B_k / k!
    auto B = bernoulli_numbers(12);
    mpq_class fact = 1;
    for (int k = 0; k <= 11; ++k) {
        if (k > 0) fact *= k;
        Scalar expect = Scalar(mpq_class(B[k] / fact));
        const Scalar* got = bern.get(k - 1);
        CHECK((got ? *got : Scalar(0)) == expect);
    }

    // bern * (e^z - 1) = 1 on [0, N-1]
    Laurent1<Scalar> em1(1, 11);
    mpq_class f2 = 1;
    for (int k = 1; k <= 11; ++k) {
        f2 *= k;
        em1.set(k, Scalar(mpq_class(1) / f2));
    }
    auto prod = l1_mul(bern, em1, [](const Scalar& a, const Scalar& b) { return a * b; });
    Laurent1<Scalar> one(0, prod.hi);
    one.set(0, Scalar(1));
    CHECK(l1_eq(prod, one));
}

TEST_CASE("divide by diagonal", "[series]") {
    Series2<Scalar> f; // x - y
    f.set(1, 0, Scalar(1));
    f.set(0, 1, Scalar(-1));
    auto g = divide_by_diagonal(f);
    REQUIRE(g.get(0, 0));
    CHECK(*g.get(0, 0) == Scalar(1));
    CHECK(g.terms.size() == 1);

    Series2<Scalar> f2; // x^2 - y^2 -> x + y
    f2.set(2, 0, Scalar(1));
    f2.set(0, 2, Scalar(-1));
    auto g2 = divide_by_diagonal(f2);
    CHECK(*g2.get(1, 0) == Scalar(1));
    CHECK(*g2.get(0, 1) == Scalar(1));
    CHECK(g2.terms.size() == 2);

    Series2<Scalar> f3; // x^3 y - x y^3 -> xy(x+y)
    f3.set(3, 1, Scalar(1));
    f3.set(1, 3, Scalar(-1));
    auto g3 = divide_by_diagonal(f3);
    CHECK(*g3.get(2, 1) == Scalar(1));
    CHECK(*g3.get(1, 2) == Scalar(1));
    CHECK(g3.terms.size() == 2);

    Series2<Scalar> bad;
    bad.set(1, 1, Scalar(1));
    CHECK_THROWS_AS(divide_by_diagonal(bad), NotDivisible);

    // round trip on random series: ((x-y) g) / (x-y) = g
    Rng rng;
    auto smul = [](const Scalar& a, const Scalar& b) { return a * b; };
    for (int trial = 0; trial < 10; ++trial) {
        Series2<Scalar> g4(5);
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; a + b <= 5; ++b) g4.set(a, b, Scalar(rng.next(-5, 5)));
        auto rt = divide_by_diagonal(s2_mul(f, g4, smul));
        CHECK(s2_eq(rt, g4));
    }
}

TEST_CASE("vandermonde divide", "[series]") {
    Series3<Scalar> V; // (z1-z2)(z1-z3)(z2-z3) expanded
    auto addterm = [&](int a, int b, int c, long k) { V.accumulate({a, b, c}, Scalar(k)); };
    // (z1-z2)(z1-z3) = z1^2 - z1 z3 - z1 z2 + z2 z3
    // times (z2-z3): z1^2 z2 - z1^2 z3 - z1 z2 z3 + z1 z3^2 - z1 z2^2 + z1 z2 z3 + z2^2 z3 - z2 z3^2
    addterm(2, 1, 0, 1);
    addterm(2, 0, 1, -1);
    addterm(1, 0, 2, 1);
    addterm(1, 2, 0, -1);
    addterm(0, 2, 1, 1);
    addterm(0, 1, 2, -1);
    auto q = vandermonde_divide(V);
    REQUIRE(q.get({0, 0, 0}));
    CHECK(*q.get({0, 0, 0}) == Scalar(1));
    CHECK(q.terms.size() == 1);

    Series3<Scalar> zero;
    CHECK(vandermonde_divide(zero).is_zero());

    // V * (z1 + z2 + z3) -> z1 + z2 + z3
    Series3<Scalar> W;
    for (const auto& [e, c] : V.terms)
        for (int v = 0; v < 3; ++v) {
            auto e2 = e;
            e2[v] += 1;
            W.accumulate(e2, c);
        }
    auto q2 = vandermonde_divide(W);
    CHECK(q2.terms.size() == 3);
    CHECK(*q2.get({1, 0, 0}) == Scalar(1));
    CHECK(*q2.get({0, 1, 0}) == Scalar(1));
    CHECK(*q2.get({0, 0, 1}) == Scalar(1));

    Series3<Scalar> bad;
    bad.set({1, 0, 0}, Scalar(1));
    CHECK_THROWS_AS(vandermonde_divide(bad), NotDivisible);
}
