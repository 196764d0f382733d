#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ospq/weights.hpp"

using namespace ospq;

TEST_CASE("root system sizes and rho") {
    for (int l = 1; l <= 3; ++l) {
        RootData R(l);
        CHECK(static_cast<int>(R.positive_roots().size()) == l * l);
        // derived by direct enumeration: sum the positive roots, then halve
        Weight sum = Weight::zero(l);
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j) {
                Weight d = Weight::zero(l), s = Weight::zero(l);
                d.twice[i] = 2; d.twice[j] = -2;
                s.twice[i] = 2; s.twice[j] = 2;
                sum = sum + d + s;
            }
        for (int i = 0; i < l; ++i) {
            Weight b = Weight::zero(l);
            b.twice[i] = 2;
            sum = sum + b;
        }
        for (int i = 0; i < l; ++i) CHECK(R.rho().twice[i] == sum.twice[i] / 2);
        for (int i = 0; i < l; ++i) CHECK(R.rho().twice[i] == 2 * (l - 1 - i) + 1);
    }
    RootData R2(2);
    CHECK(R2.rho().twice == std::vector<int>{3, 1});
    RootData R1(1);
    CHECK(R1.rho().twice == std::vector<int>{1});
    CHECK_THROWS_AS(RootData(0), domain_error);
}

TEST_CASE("literal-sum convention") {
    RootData R(2, RhoConvention::LiteralSum);
    CHECK(R.rho().twice == std::vector<int>{6, 2});
}

TEST_CASE("bilinear form") {
    RootData R(3);
    CHECK(bilinear(R.beta(1), R.beta(1)) == Rat(1));
    CHECK(bilinear(R.beta(1), R.beta(2)) == Rat(0));
    // (omega_l, alpha_i) = 0 for i < l
    for (int i = 1; i < 3; ++i) CHECK(bilinear(R.omega(3), R.simple_root(i)) == Rat(0));
    CHECK(bilinear(Weight::zero(3), R.omega(2)) == Rat(0));
    CHECK(pair_mod2(Gamma::of(R.omega(3)), R.simple_root(3)) == 1);
}

TEST_CASE("cartan pairings") {
    RootData R(2);
    CHECK(cartan_int(R.simple_root(2), R.simple_root(1)) == -1);
    CHECK(cartan_int(R.simple_root(1), R.simple_root(2)) == -2);
    for (int i = 1; i <= 2; ++i) CHECK(cartan_int(R.simple_root(i), R.simple_root(i)) == 2);
    CHECK_THROWS_AS(cartan_pair(R.beta(1), Weight::zero(2)), domain_error);
}

TEST_CASE("lattice membership") {
    Weight half(std::vector<int>{1, 1});
    CHECK(half.in_weight_lattice());
    CHECK(!half.is_integral());
    Weight mixed(std::vector<int>{1, 2});
    CHECK(!mixed.in_weight_lattice());
    CHECK(Weight(std::vector<int>{2, -4}).is_integral());
}

TEST_CASE("eta and parity") {
    for (int l = 1; l <= 3; ++l) {
        RootData R(l);
        // eta(alpha_l) = 0 by the beta_{l+1} = 0 convention
        CHECK(R.eta(R.simple_root(l)).is_zero());
        if (l >= 2) {
            Gamma expect = Gamma::zero(l);
            expect.bits[1] = 1;
            CHECK(R.eta(R.simple_root(1)) == expect);
        }
        // eta kills doubled weights
        CHECK(R.eta(R.omega(l).scaled(2)).is_zero());
        CHECK(R.parity(R.simple_root(l)) == 1);
        for (int i = 1; i < l; ++i) CHECK(R.parity(R.simple_root(i)) == 0);
        CHECK(R.parity(R.simple_root(l).scaled(2)) == 0);
        CHECK_THROWS_AS(R.eta(Weight(std::vector<int>(l, 1))), domain_error);
    }
}

TEST_CASE("sign identity on the exhaustive grid") {
    for (int l = 1; l <= 3; ++l) {
        RootData R(l);
        std::vector<Weight> grid;
        std::vector<int> c(static_cast<size_t>(l), 0);
        for (;;) {
            Weight w = Weight::zero(l);
            for (int i = 0; i < l; ++i) w = w + R.simple_root(i + 1).scaled(c[i]);
            grid.push_back(w);
            size_t p = 0;
            while (p < c.size() && c[p] == 2) c[p++] = 0;
            if (p == c.size()) break;
            c[p]++;
        }
        for (const Weight& a : grid)
            for (const Weight& b : grid) CHECK(R.sign_identity(a, b));
        // both sides explicitly on the diagonal case
        int lhs = (pair_mod2(R.eta(R.simple_root(l)), R.simple_root(l)) * 2 +
                   pair_mod2(R.simple_root(l), R.simple_root(l))) & 1;
        CHECK(lhs == 1);
    }
}

TEST_CASE("weyl group and dot action") {
    RootData R(2);
    WeylElement s1 = R.simple_reflection(1), s2 = R.simple_reflection(2);
    CHECK(s1.compose(s1) == WeylElement::identity(2));
    CHECK(s2.apply(R.beta(2)) == -R.beta(2));
    CHECK(s1.apply(R.beta(1)) == R.beta(2));

    // reflection in an arbitrary root agrees with the formula on basis vectors
    Weight root = R.beta(1) + R.beta(2);
    WeylElement sr = R.reflection(root);
    CHECK(sr.apply(R.beta(1)) == -R.beta(2));

    // dot action fixes -rho
    for (int i = 1; i <= 2; ++i) CHECK(R.dot(R.simple_reflection(i), -R.rho()) == -R.rho());

    // group action property on sampled weights
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        WeylElement w1 = R.simple_reflection(1 + int(rng() % 2));
        WeylElement w2 = R.simple_reflection(1 + int(rng() % 2));
        if (rng() % 2) w1 = w1.compose(R.simple_reflection(1 + int(rng() % 2)));
        std::vector<int> t{int(rng() % 9) - 4, int(rng() % 9) - 4};
        t[1] += (t[0] ^ t[1]) & 1; // same parity
        Weight lam(t);
        CHECK(R.dot(w1.compose(w2), lam) == R.dot(w1, R.dot(w2, lam)));
    }
}

TEST_CASE("rank-1 dot reflection in twice-coordinates") {
    RootData R(1);
    for (int t = -6; t <= 6; ++t)
        CHECK(R.dot(R.simple_reflection(1), Weight(std::vector<int>{t})).twice[0] == -t - 2);
}

TEST_CASE("weyl element serialization") {
    RootData R(2);
    CHECK(R.simple_reflection(2).str() == "[(1, +1), (2, -1)]");
}
