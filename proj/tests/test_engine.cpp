#include <catch2/catch_amalgamated.hpp>

#include "wallx/engine.hpp"

using namespace wallx;

TEST_CASE("wall factors") {
    const Geometry coni = geometry_conifold();
    SECTION("conifold (1,0) gives 1+q0") {
        Series expect = Series::one(2, 4);
        expect.add_term({1, 0}, 1);
        REQUIRE(wall_factor_eu(coni, {1, 0}, 4) == expect);
    }
    SECTION("alpha_k with k != 0 gives 1") {
        REQUIRE(wall_factor_eu(coni, {0, 1}, 4) == Series::one(2, 4));
        const Geometry ex = geometry_example12();
        DimVec a(6, 0);
        a[2] = 1;
        REQUIRE(wall_factor_eu(ex, a, 4) == Series::one(6, 4));
    }
    SECTION("conifold (2,1) gives (1+q0^2 q1)^2") {
        Series expect = Series::one(2, 6);
        expect.add_term({2, 1}, 2);
        expect.add_term({4, 2}, 1);
        REQUIRE(wall_factor_eu(coni, {2, 1}, 6) == expect);
    }
    SECTION("imaginary vectors are rejected") {
        REQUIRE_THROWS_AS(wall_factor_eu(coni, {1, 1}, 4), DomainError);
    }
}

TEST_CASE("z_eu boundary modes") {
    const Geometry coni = geometry_conifold();
    SECTION("PT chamber relative to trivial at D=2") {
        const Zeta z = {Rat(-1) + Rat(1, 7), Rat(1)};
        Series expect = Series::one(2, 2);
        expect.add_term({1, 0}, 1);
        REQUIRE(z_eu(coni, z, 2, ZMode::RelativeToTrivial) == expect);
    }
    SECTION("cyclic chamber ratio is 1") {
        REQUIRE(z_eu(coni, {Rat(-1), Rat(-1)}, 5, ZMode::RelativeToCyclic) ==
                Series::one(2, 5));
    }
    SECTION("(-3,1) crosses only the trivial wall") {
        REQUIRE(z_eu(coni, {Rat(-3), Rat(1)}, 2, ZMode::RelativeToCyclic) == Series::one(2, 2));
    }
    SECTION("mode and genericity preconditions") {
        REQUIRE_THROWS_AS(z_eu(coni, {Rat(-1), Rat(-1)}, 4, ZMode::RelativeToTrivial),
                          DomainError);
        REQUIRE_THROWS_AS(z_eu(coni, {Rat(1), Rat(1)}, 4, ZMode::RelativeToCyclic), DomainError);
        REQUIRE_THROWS_AS(z_eu(coni, {Rat(1), Rat(-1)}, 4, ZMode::RelativeToCyclic), DomainError);
        REQUIRE_THROWS_AS(z_eu(coni, {Rat(0), Rat(-1)}, 4, ZMode::RelativeToCyclic), DomainError);
    }
    SECTION("oracle mode at the cyclic point is the crystal series") {
        REQUIRE(z_eu(coni, {Rat(-1), Rat(-1)}, 4, ZMode::AbsoluteWithOracle) ==
                enumerate_molten(coni, 4));
    }
}

TEST_CASE("signed series") {
    const Geometry coni = geometry_conifold();
    SECTION("PT chamber signed factors alternate") {
        const Series zs = z_signed(coni, pt_zeta(coni), 4, ZMode::RelativeToTrivial);
        // (1+q0)(1-q0^2 q1)^2 truncated at total degree 4
        Series expect = Series::one(2, 4);
        expect.add_term({1, 0}, 1);
        expect.add_term({2, 1}, -2);
        expect.add_term({3, 1}, -2);
        REQUIRE(zs == expect);
    }
    SECTION("double substitution returns the Euler series") {
        const Zeta z = {Rat(-5), Rat(4)};
        const Series zeu = z_eu(coni, z, 4, ZMode::RelativeToCyclic);
        REQUIRE(sign_substitute(z_signed(coni, z, 4, ZMode::RelativeToCyclic), coni) == zeu);
    }
}

TEST_CASE("PT MacMahon table") {
    SECTION("conifold lowest entries") {
        const GradedTable t = z_pt_macmahon(geometry_conifold(), 6);
        REQUIRE(t.at({0, {0}}) == 1);
        REQUIRE(t.at({1, {1}}) == 1);   // q t from (1 + q t)
        REQUIRE(t.at({2, {1}}) == -2);  // from (1 - q^2 t)^2
        REQUIRE(t.count({1, {0}}) == 0);
    }
    SECTION("rank one is trivial") {
        const GradedTable t = z_pt_macmahon(geometry_c3(), 6);
        REQUIRE(t.size() == 1);
        REQUIRE(t.at({0, {}}) == 1);
    }
    SECTION("(2,0) single factor has positive epsilon") {
        const Geometry g20 = geometry_from_rows(2, 0, {0, 0});
        const GradedTable t = z_pt_macmahon(g20, 6);
        REQUIRE(t.at({1, {1}}) == -1);  // M(t,-q)^{+1} starts 1 - q t
    }
}

TEST_CASE("GV invariants") {
    REQUIRE(gv_invariants(geometry_conifold()) == std::vector<GvEntry>{{1, 1, 1}});
    const Geometry g20 = geometry_from_rows(2, 0, {0, 0});
    REQUIRE(gv_invariants(g20) == std::vector<GvEntry>{{1, 1, -1}});
    const auto ex = gv_invariants(geometry_example12());
    REQUIRE(ex.size() == 15);  // 0 < a <= b < 6, genus 0 only
}
