#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ospq/scalar.hpp"

using namespace ospq;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    // small Laurent polynomial over the Gaussian rationals
    Scalar s = Scalar::zero();
    int terms = 1 + int(rng() % 3);
    for (int k = 0; k < terms; ++k) {
        long num = long(rng() % 7) - 3;
        long den = 1 + long(rng() % 3);
        long im = long(rng() % 3) - 1;
        Rat re(num, den);
        re.canonicalize();
        GQ c(re, Rat(im));
        s += Scalar(c) * Scalar::v_pow(long(rng() % 7) - 3);
    }
    return s;
}

} // namespace

TEST_CASE("gaussian rational arithmetic") {
    GQ i = GQ::unit_i();
    CHECK(i * i == GQ(-1));
    CHECK((GQ(Rat(3, 2)) + i * GQ(2)).str() == "(3/2 + 2*I)");
    CHECK((i * GQ(2)).inverse() * (i * GQ(2)) == GQ(1));
}

TEST_CASE("q-integers expand as balanced Laurent polynomials") {
    CHECK(q_int(1, Scalar::v()) == Scalar::one());
    // [2] at base v
    CHECK(q_int(2, Scalar::v()) == Scalar::v() + Scalar::v_pow(-1));
    // [3] at base v^2
    CHECK(q_int(3, Scalar::v_pow(2)) ==
          Scalar::v_pow(4) + Scalar::one() + Scalar::v_pow(-4));
    CHECK(q_int(0, Scalar::v()).is_zero());
    CHECK(q_int(-2, Scalar::v()) == -q_int(2, Scalar::v()));
    CHECK_THROWS_AS(q_int(2, Scalar::one()), domain_error);
    CHECK_THROWS_AS(q_int(2, Scalar(-1)), domain_error);
    CHECK_THROWS_AS(q_int(2, Scalar::zero()), domain_error);
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(5, 0, Scalar::v()) == Scalar::one());
    CHECK(q_binomial(2, 1, Scalar::v()) == Scalar::v() + Scalar::v_pow(-1));
    CHECK(q_binomial(3, 2, Scalar::v()) ==
          Scalar::v_pow(2) + Scalar::one() + Scalar::v_pow(-2));
    CHECK_THROWS_AS(q_binomial(2, 3, Scalar::v()), domain_error);

    // Pascal-type identity against the factorial expansion
    for (long n = 1; n <= 8; ++n)
        for (long m = 0; m <= n; ++m) {
            Scalar lhs = q_binomial(n, m, Scalar::v());
            Scalar rhs = Scalar::zero();
            if (m <= n - 1) rhs += Scalar::v_pow(m) * q_binomial(n - 1, m, Scalar::v());
            if (m >= 1) rhs += Scalar::v_pow(m - n) * q_binomial(n - 1, m - 1, Scalar::v());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("defining quotient of the q-integer") {
    for (long n = 0; n <= 12; ++n) {
        Scalar v = Scalar::v();
        CHECK(q_int(n, v) * (v - v.inverse()) == v.pow(n) - v.pow(-n));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar::zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one());
    }
}

TEST_CASE("canonical forms") {
    // (v - v^-1)(v + v^-1) = v^2 - v^-2
    Scalar v = Scalar::v();
    CHECK((v - v.inverse()) * (v + v.inverse()) == v.pow(2) - v.pow(-2));
    // (i v)^2 = -v^2
    CHECK((Scalar::unit_i() * v).pow(2) == -v.pow(2));
    // denominators normalize to a monic polynomial
    Scalar s = Scalar::one() / (Scalar::q() - Scalar::q_pow(-1));
    CHECK(s.den().leading().is_one());
    CHECK(s * (Scalar::q() - Scalar::q_pow(-1)) == Scalar::one());
    // equality is canonical-form identity
    CHECK(Scalar::q_pow(2) / Scalar::q() == Scalar::q());
}

TEST_CASE("scalar text form") {
    CHECK(Scalar::zero().str() == "0");
    CHECK(Scalar::v_pow(-3).str() == "v^-3");
    CHECK((Scalar(GQ(Rat(3, 2), Rat(1, 2))) * Scalar::v_pow(-3) + Scalar::v()).str() ==
          "(3/2 + 1/2*I)*v^-3 + v");
    CHECK((Scalar::v() + Scalar::v_pow(-1)).str() == "v^-1 + v");
    CHECK((Scalar::one() / (Scalar::q() - Scalar::q_pow(-1))).str() == "(v^2)/(-1 + v^4)");
}
