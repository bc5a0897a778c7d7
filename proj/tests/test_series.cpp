#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wallx/series.hpp"

using namespace wallx;

namespace {

Series mono(int nvars, int cap, const Series::Exp& e, long long c) {
    Series s(nvars, cap);
    s.add_term(e, Int(c));
    return s;
}

Series random_series(std::mt19937& rng, int nvars, int cap, int nterms) {
    Series s(nvars, cap);
    for (int i = 0; i < nterms; ++i) {
        Series::Exp e(nvars);
        for (auto& x : e) x = (int)(rng() % (cap + 1));
        s.add_term(e, Int((long long)(rng() % 9) - 4));
    }
    return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    const int D = 6;
    Series one = Series::one(1, D);
    Series q = mono(1, D, {1}, 1);

    SECTION("(1-q) * geometric = 1") {
        Series geo(1, D);
        for (int j = 0; j <= D; ++j) geo.add_term({j}, 1);
        REQUIRE((one - q) * geo == one);
        REQUIRE((one - q).invert() == geo);
    }
    SECTION("pow(1+q, -1) at D=3") {
        Series s = Series::one(1, 3) + mono(1, 3, {1}, 1);
        Series expect(1, 3);
        expect.add_term({0}, 1);
        expect.add_term({1}, -1);
        expect.add_term({2}, 1);
        expect.add_term({3}, -1);
        REQUIRE(s.pow(-1) == expect);
    }
    SECTION("(1+q0)(1+q1)") {
        Series a = Series::one(2, 4) + mono(2, 4, {1, 0}, 1);
        Series b = Series::one(2, 4) + mono(2, 4, {0, 1}, 1);
        Series expect = Series::one(2, 4);
        expect.add_term({1, 0}, 1);
        expect.add_term({0, 1}, 1);
        expect.add_term({1, 1}, 1);
        REQUIRE(a * b == expect);
    }
    SECTION("invert requires a unit constant term") {
        REQUIRE_THROWS_AS(q.invert(), DomainError);
        REQUIRE_THROWS_AS((q + q).invert(), DomainError);
    }
}

TEST_CASE("binomial factors") {
    Series expect = Series::one(2, 4);
    expect.add_term({1, 0}, 1);
    REQUIRE(binomial_factor(+1, {1, 0}, 1, 4) == expect);

    Series sq = Series::one(2, 2);
    sq.add_term({1, 0}, 2);
    sq.add_term({2, 0}, 1);
    REQUIRE(binomial_factor(+1, {1, 0}, 2, 2) == sq);

    Series geo = Series::one(2, 4);
    geo.add_term({1, 1}, 1);
    geo.add_term({2, 2}, 1);
    REQUIRE(binomial_factor(-1, {1, 1}, -1, 4) == geo);

    REQUIRE_THROWS_AS(binomial_factor(+1, {0, 0}, 1, 4), DomainError);
}

TEST_CASE("macmahon products") {
    SECTION("plane partitions") {
        const Series m = macmahon({0}, {1}, +1, +1, 1, 3);
        REQUIRE(m.coeff({0}) == 1);
        REQUIRE(m.coeff({1}) == 1);
        REQUIRE(m.coeff({2}) == 3);
        REQUIRE(m.coeff({3}) == 6);
    }
    SECTION("M(q1, -q)^{-1} at D=3") {
        const Series m = macmahon({0, 1}, {1, 1}, +1, -1, -1, 3);
        Series expect = Series::one(2, 3);
        expect.add_term({1, 2}, 1);
        REQUIRE(m == expect);
    }
    SECTION("zero power is one") {
        REQUIRE(macmahon({0, 1}, {1, 1}, +1, -1, 0, 5) == Series::one(2, 5));
    }
    SECTION("inverse powers multiply to one") {
        const Series a = macmahon({0, 1}, {1, 0}, +1, +1, 2, 5);
        const Series b = macmahon({0, 1}, {1, 0}, +1, +1, -2, 5);
        REQUIRE(a * b == Series::one(2, 5));
    }
    REQUIRE_THROWS_AS(macmahon({1}, {0}, +1, +1, 1, 3), DomainError);
}

TEST_CASE("sign substitution") {
    const Geometry coni = geometry_conifold();
    SECTION("conifold flips q1 only") {
        Series s = Series::one(2, 4);
        s.add_term({1, 1}, 1);
        const Series t = sign_substitute(s, coni);
        REQUIRE(t.coeff({1, 1}) == -1);
        REQUIRE(t.coeff({0, 0}) == 1);
    }
    SECTION("example geometry flip set") {
        const auto flip = sign_flip_set(geometry_example12());
        REQUIRE(flip == std::vector<bool>{true, true, true, false, true, true});
    }
    SECTION("involution and compatibility with products") {
        std::mt19937 rng(11);
        for (int it = 0; it < 20; ++it) {
            const Series a = random_series(rng, 2, 4, 6);
            const Series b = random_series(rng, 2, 4, 6);
            REQUIRE(sign_substitute(sign_substitute(a, coni), coni) == a);
            REQUIRE(sign_substitute(a * b, coni) ==
                    sign_substitute(a, coni) * sign_substitute(b, coni));
        }
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(5);
    for (int it = 0; it < 15; ++it) {
        const Series a = random_series(rng, 3, 4, 5);
        const Series b = random_series(rng, 3, 4, 5);
        const Series c = random_series(rng, 3, 4, 5);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("sheaf regrading") {
    Series s = Series::one(3, 6);
    s.add_term({1, 1, 1}, 5);
    s.add_term({2, 1, 2}, -3);
    const GradedTable minus = to_sheaf_grading(s, BetaOrientation::BetaMinus);
    REQUIRE(minus.at({1, {0, 0}}) == 5);
    REQUIRE(minus.at({2, {1, 0}}) == -3);
    REQUIRE(minus.at({0, {0, 0}}) == 1);
    const GradedTable plus = to_sheaf_grading(s, BetaOrientation::BetaPlus);
    REQUIRE(plus.at({2, {-1, 0}}) == -3);

    // conifold v = (n, n-1) maps to (n, beta=1) under beta_minus
    Series t(2, 6);
    t.add_term({3, 2}, 7);
    REQUIRE(to_sheaf_grading(t, BetaOrientation::BetaMinus).at({3, {1}}) == 7);
}
