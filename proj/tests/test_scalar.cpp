#include <catch2/catch.hpp>

#include "acyb/scalar.hpp"

using namespace acyb;

namespace {

// Deterministic LCG, enough to sample random operand triples.
struct Rng {
    unsigned long long s = 0x2545F4914F6CDD1DULL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    Scalar rational() {
        long d = next(1, 7);
        return Scalar(next(-9, 9), d);
    }
    Scalar cyclotomic(unsigned m) {
        std::vector<mpq_class> c(euler_phi(m));
        for (auto& x : c) x = mpq_class(next(-5, 5), next(1, 4));
        return Scalar(m, std::move(c));
    }
};

} // namespace

TEST_CASE("rational arithmetic is exact and canonical", "[scalar]") {
    CHECK(Scalar(1, 3) + Scalar(1, 6) == Scalar(1, 2));
    CHECK(Scalar(2, 7) / Scalar(2, 7) == Scalar(1));
    CHECK((Scalar(2, 4)).str() == "1/2");
    CHECK(Scalar(-4, -8) == Scalar(1, 2));
    CHECK(Scalar(3).str() == "3");
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
}

TEST_CASE("cyclotomic reduction and demotion", "[scalar]") {
    Scalar i = primitive_root(4);
    CHECK(i * i == Scalar(-1));
    CHECK((i * i).is_rational());
    CHECK(primitive_root(1) == Scalar(1));
    CHECK(primitive_root(2) == Scalar(-1));
    Scalar z3 = primitive_root(3);
    CHECK(z3 * z3 * z3 == Scalar(1));
    CHECK(z3 * z3 + z3 + Scalar(1) == Scalar(0)); // minimal polynomial
    CHECK(z3.inv() * z3 == Scalar(1));
}

TEST_CASE("primitive roots have exact order up to 12", "[scalar]") {
    for (unsigned m = 1; m <= 12; ++m) {
        Scalar z = primitive_root(m);
        CHECK(z.pow(m) == Scalar(1));
        for (unsigned j = 1; j < m; ++j) CHECK(z.pow(j) != Scalar(1));
    }
}

TEST_CASE("field axioms on random triples", "[scalar]") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a, b, c;
        if (trial % 3 == 0) {
            a = rng.cyclotomic(6);
            b = rng.cyclotomic(6);
            c = rng.cyclotomic(3); // 3 | 6 promotes
        } else if (trial % 3 == 1) {
            a = rng.cyclotomic(4);
            b = rng.rational();
            c = rng.cyclotomic(4);
        } else {
            a = rng.rational();
            b = rng.rational();
            c = rng.rational();
        }
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    }
}

TEST_CASE("incompatible orders are rejected", "[scalar]") {
    Scalar z3 = primitive_root(3);
    Scalar z4 = primitive_root(4);
    CHECK_THROWS_AS(z3 + z4, IncompatibleCyclotomicOrders);
    CHECK(z3 != z4); // distinct proper extensions only meet in Q
    Scalar z6 = primitive_root(6);
    CHECK(z6 * z6 == z3 * Scalar(-1) * Scalar(-1) * z6 * z6 / z3); // 3 | 6 mixing works
}

TEST_CASE("string round trips", "[scalar]") {
    for (const char* s : {"0", "-7", "1/2", "-3/4"}) {
        CHECK(Scalar::parse(s).str() == s);
    }
    Scalar z12 = primitive_root(12);
    Scalar v = z12 * Scalar(3, 5) + Scalar(1, 7);
    CHECK(Scalar::parse(v.str()) == v);
    CHECK_THROWS_AS(Scalar::parse("zeta"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2/3"), ParseError);
}
