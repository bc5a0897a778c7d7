#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wallx/toric.hpp"

using namespace wallx;

TEST_CASE("parse_geometry basics") {
    const Geometry g = geometry_example12();
    REQUIRE(g.N == 6);
    REQUIRE(g.Ir == std::vector<int>{0, 3});

    const Geometry coni = geometry_conifold();
    REQUIRE(coni.N == 2);
    REQUIRE(coni.Ir.empty());

    const Geometry c3 = geometry_c3();
    REQUIRE(c3.N == 1);
    REQUIRE(c3.Ir == std::vector<int>{0});
}

TEST_CASE("parse_geometry rejects bad input") {
    REQUIRE_THROWS_AS(parse_geometry(0, 0, {}), DomainError);
    REQUIRE_THROWS_AS(parse_geometry(1, 2, {{1, 0}, {1, 1}, {3, 1}}), DomainError);
    // duplicate value
    REQUIRE_THROWS_AS(parse_geometry(2, 0, {{1, 0}, {1, 0}}), DomainError);
    // x out of row range
    REQUIRE_THROWS_AS(parse_geometry(1, 1, {{3, 0}, {1, 1}}), DomainError);
    // increasing within a row
    REQUIRE_THROWS_AS(parse_geometry(2, 0, {{1, 0}, {3, 0}}), DomainError);
    // wrong length
    REQUIRE_THROWS_AS(parse_geometry(2, 1, {{3, 0}, {1, 0}}), DomainError);
}

TEST_CASE("divisor matrices from the worked example") {
    const Geometry g = geometry_example12();
    const Divisor e52 = divisor(g, DivisorKind::EPlus, 5);
    REQUIRE(e52.row1 == std::vector<long long>{0, 0, 0});
    REQUIRE(e52.row0 == std::vector<long long>{0, 0, 0, 1, 1});

    const Divisor f4 = divisor(g, DivisorKind::FPlus, 4);
    REQUIRE(f4.row1 == std::vector<long long>{0, 0, 1});
    REQUIRE(f4.row0 == std::vector<long long>{0, 0, 1, 2, 3});

    const Divisor ftot = divisor(g, DivisorKind::FPlusTotal);
    REQUIRE(ftot.row1 == std::vector<long long>{0, 1, 5});
    REQUIRE(ftot.row0 == std::vector<long long>{0, 0, 2, 5, 10});

    REQUIRE_THROWS_AS(divisor(g, DivisorKind::EPlus, 4), DomainError);
    REQUIRE_THROWS_AS(divisor(g, DivisorKind::FPlus, 7), DomainError);
    REQUIRE_THROWS_AS(divisor(g, DivisorKind::I, 6), DomainError);
}

TEST_CASE("support functions") {
    const Geometry g = geometry_example12();

    SECTION("psi(F+_N) = -x") {
        const SupportFn s = support_function(g, divisor(g, DivisorKind::FPlus, g.N));
        REQUIRE(is_globally_linear(g, s));
        REQUIRE(s.form[0] == std::array<long long, 3>{-1, 0, 0});
    }
    SECTION("psi(E+_i + E-_i) is y-z or -y") {
        for (int t = 0; t < g.N; ++t) {
            const Divisor d = divisor(g, DivisorKind::EPlus, 2 * t + 1) +
                              divisor(g, DivisorKind::EMinus, 2 * t + 1);
            const SupportFn s = support_function(g, d);
            REQUIRE(is_globally_linear(g, s));
            const std::array<long long, 3> expect =
                g.sigma[t].y == 0 ? std::array<long long, 3>{0, 1, -1}
                                  : std::array<long long, 3>{0, -1, 0};
            REQUIRE(s.form[0] == expect);
        }
    }
    SECTION("zero divisor has zero forms") {
        const SupportFn s = support_function(g, zero_divisor(g));
        REQUIRE(is_globally_linear(g, s));
        REQUIRE(s.form[0] == std::array<long long, 3>{0, 0, 0});
    }
    SECTION("psi(F+) is upper convex, single E+ is not linear") {
        REQUIRE(is_upper_convex(g, support_function(g, divisor(g, DivisorKind::FPlusTotal))));
        const Geometry coni = geometry_conifold();
        const SupportFn s = support_function(coni, divisor(coni, DivisorKind::EPlus, 1));
        REQUIRE_FALSE(is_globally_linear(coni, s));
    }
}

TEST_CASE("curve types") {
    const Geometry g = geometry_example12();
    REQUIRE(curve_type(g, 3) == "(0,-2)");
    REQUIRE(curve_type(g, 1) == "(-1,-1)");
    REQUIRE(curve_type(geometry_conifold(), 1) == "(-1,-1)");
    REQUIRE_THROWS_AS(curve_type(g, 6), DomainError);
}

TEST_CASE("randomized toric invariants") {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        const int N = 1 + (int)(rng() % 8);
        const int N1 = (int)(rng() % (N / 2 + 1));
        std::vector<int> yseq(N - N1, 0);
        yseq.insert(yseq.end(), N1, 1);
        std::shuffle(yseq.begin(), yseq.end(), rng);
        const Geometry g = geometry_from_rows(N - N1, N1, yseq);

        REQUIRE((g.N - (int)g.Ir.size()) % 2 == 0);

        // E+_i + E-_i is the full row of sigma(i) and nothing else
        const int t = (int)(rng() % g.N);
        const Divisor d =
            divisor(g, DivisorKind::EPlus, 2 * t + 1) + divisor(g, DivisorKind::EMinus, 2 * t + 1);
        const int row = g.sigma[t].y;
        for (int x = 0; x <= (row == 0 ? g.N0 : g.N1); ++x) REQUIRE(d.at(row, x) == 1);
        for (int x = 0; x <= (row == 0 ? g.N1 : g.N0); ++x) REQUIRE(d.at(1 - row, x) == 0);

        // psi(F+_k) and psi(F-_k) differ by a global linear form
        const int k = 1 + (int)(rng() % g.N);
        const Divisor diff =
            divisor(g, DivisorKind::FPlus, k) - divisor(g, DivisorKind::FMinus, k);
        REQUIRE(is_globally_linear(g, support_function(g, diff)));
    }
}
