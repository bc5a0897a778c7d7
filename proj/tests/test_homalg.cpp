#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wallx/homalg.hpp"
#include "wallx/selftest.hpp"

using namespace wallx;

namespace {

Rep framed_cyclic_s0(const Quiver& q) {
    std::vector<int> dims(q.N, 0);
    dims[0] = 1;
    Rep r = rep_zero(q, dims, true, 1);
    r.framing.at(0, 0) = 1;
    return r;
}

}  // namespace

TEST_CASE("string modules") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("the (-,+) string on positions 1..3") {
        const StringModule s = string_module(coni, 1, 3, {-1, +1});
        REQUIRE(s.rep.dim == std::vector<int>{1, 2});
        REQUIRE(check_relations(coni, s.rep));
        // v2 -> v1 via h-_{3/2} (t=1), v2 -> v3 via h+_{5/2} = h+_{1/2} (t=0)
        REQUIRE(s.rep.mat[coni.hminus[1]].at(0, 0) == 1);
        REQUIRE(s.rep.mat[coni.hplus[0]].at(1, 0) == 1);
    }
    SECTION("length-one strings are simple modules") {
        for (int k = 0; k < 2; ++k) {
            const StringModule s = string_module(coni, k, k, {});
            REQUIRE(s.rep.dim[k] == 1);
            REQUIRE(s.rep.total_dim() == 1);
            REQUIRE(check_relations(coni, s.rep));
        }
    }
    SECTION("all strings satisfy the relations") {
        std::mt19937 rng(23);
        const Quiver ex = build_quiver(geometry_example12());
        for (int it = 0; it < 50; ++it) {
            const int n0 = (int)(rng() % ex.N);
            const int len = 1 + (int)(rng() % 6);
            std::vector<int> orient(len - 1);
            for (auto& o : orient) o = rng() % 2 ? 1 : -1;
            REQUIRE(check_relations(ex, string_module(ex, n0, n0 + len - 1, orient).rep));
        }
    }
}

TEST_CASE("coordinate stability") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("framed cyclic module at the cyclic chamber") {
        REQUIRE(is_stable_tinv(coni, framed_cyclic_s0(coni), {Rat(-1), Rat(-1)}));
    }
    SECTION("string stability on the wall") {
        const Zeta z = {Rat(2), Rat(-1)};
        const StringModule bad = string_module(coni, 1, 3, {+1, +1});
        REQUIRE_FALSE(is_stable_tinv(coni, bad.rep, z));
        const StringModule good = string_module(coni, 1, 3, {-1, +1});
        REQUIRE(is_stable_tinv(coni, good.rep, z));
    }
    SECTION("non-coordinate reps are rejected") {
        StringModule s = string_module(coni, 1, 3, {-1, +1});
        s.rep.mat[coni.hplus[0]].at(0, 0) = Rat(1, 2);
        REQUIRE_THROWS_AS(is_stable_tinv(coni, s.rep, {Rat(-1), Rat(-1)}), DomainError);
    }
}

TEST_CASE("find_stable_string") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("alpha = (1,2) on its wall") {
        const StringModule s = find_stable_string(coni, {Rat(2), Rat(-1)}, {1, 2});
        REQUIRE(s.rep.dim == std::vector<int>{1, 2});
        REQUIRE(s.orient == std::vector<int>{-1, +1});
        REQUIRE(s.n0 % coni.N == 1);
    }
    SECTION("simple roots give simple modules") {
        const StringModule s = find_stable_string(coni, {Rat(-1), Rat(0)}, {0, 1});
        REQUIRE(s.rep.dim == std::vector<int>{0, 1});
        const Quiver q20 = build_quiver(geometry_from_rows(2, 0, {0, 0}));
        const StringModule t = find_stable_string(q20, {Rat(-1), Rat(0)}, {0, 1});
        REQUIRE(t.rep.dim == std::vector<int>{0, 1});
    }
    SECTION("wall preconditions are enforced") {
        REQUIRE_THROWS_AS(find_stable_string(coni, {Rat(1), Rat(1)}, {1, 2}), DomainError);
        REQUIRE_THROWS_AS(find_stable_string(coni, {Rat(-1), Rat(-1)}, {1, 1}), DomainError);
    }
}

TEST_CASE("hom and ext dimensions") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("framed cyclic point module") {
        const Rep e = framed_cyclic_s0(coni);
        const auto d = hom_ext(coni, e, e);
        REQUIRE(d.hom == 1);
        REQUIRE(d.ext1 == 0);
    }
    SECTION("self-extensions of simples follow the parity rule") {
        const StringModule s1 = string_module(coni, 1, 1, {});
        REQUIRE(hom_ext(coni, s1.rep, s1.rep).ext1 == 0);
        const Quiver q20 = build_quiver(geometry_from_rows(2, 0, {0, 0}));
        const StringModule t1 = string_module(q20, 1, 1, {});
        REQUIRE(hom_ext(q20, t1.rep, t1.rep).ext1 == 1);
    }
    SECTION("ext1 between simples counts arrows") {
        const StringModule s0 = string_module(coni, 0, 0, {});
        const StringModule s1 = string_module(coni, 1, 1, {});
        REQUIRE(hom_ext(coni, s0.rep, s1.rep).ext1 == 2);
        REQUIRE(hom_ext(coni, s1.rep, s0.rep).ext1 == 2);
    }
    SECTION("framing direction: ext1(S_inf, C) = dim C_0, ext1(C, S_inf) = 0") {
        std::vector<int> zero(coni.N, 0);
        Rep sinf = rep_zero(coni, zero, true, 1);
        std::vector<int> dims(coni.N, 0);
        dims[0] = 1;
        Rep c = rep_zero(coni, dims, true, 0);
        const auto a = hom_ext(coni, sinf, c);
        const auto b = hom_ext(coni, c, sinf);
        REQUIRE(a.ext1 == 1);
        REQUIRE(b.ext1 == 0);
    }
    SECTION("relation violations are reported") {
        const Quiver q20 = build_quiver(geometry_from_rows(2, 0, {0, 0}));
        std::vector<int> dims = {1, 1};
        Rep bad = rep_zero(q20, dims);
        bad.mat[q20.hplus[0]].at(0, 0) = 1;
        bad.mat[q20.hminus[0]].at(0, 0) = 1;  // l+_0 != 0 but r_0 = 0 breaks family 1
        REQUIRE_FALSE(check_relations(q20, bad));
        REQUIRE_THROWS_AS(hom_ext(q20, bad, bad), DomainError);
    }
}

TEST_CASE("wall difference identity") {
    // ext1(V,C) - ext1(C,V) = dim C_0 for wall-stable framed V and the wall module C
    const Quiver coni = build_quiver(geometry_conifold());
    const Zeta z = {Rat(0), Rat(-1)};  // on the wall of alpha = (1,0) only
    const StringModule c = find_stable_string(coni, z, {1, 0});
    REQUIRE(c.rep.dim == std::vector<int>{1, 0});

    // V: the framed two-atom crystal module {e0, h+ e0}
    std::vector<int> dims = {1, 1};
    Rep v = rep_zero(coni, dims, true, 1);
    v.mat[coni.hplus[0]].at(0, 0) = 1;
    v.framing.at(0, 0) = 1;
    REQUIRE(is_stable_tinv(coni, v, z));

    Rep cf = c.rep;
    cf.framed = true;
    cf.dim_inf = 0;
    const auto cv = hom_ext(coni, cf, v);
    const auto vc = hom_ext(coni, v, cf);
    REQUIRE(cv.hom == 0);
    REQUIRE(vc.hom == 0);
    REQUIRE(vc.ext1 - cv.ext1 == 1);  // dim C_0
}

TEST_CASE("C_m modules") {
    const Quiver q20 = build_quiver(geometry_from_rows(2, 0, {0, 0}));
    const StringModule s1 = string_module(q20, 1, 1, {});
    SECTION("m = 1 is C itself") {
        const Rep c1 = extend_cm(q20, s1, 1);
        REQUIRE(c1.dim == s1.rep.dim);
    }
    SECTION("m = 2 is the loop Jordan block") {
        const Rep c2 = extend_cm(q20, s1, 2);
        REQUIRE(c2.dim == std::vector<int>{0, 2});
        REQUIRE(check_relations(q20, c2));
        const Mat& r1 = c2.mat[q20.loop_at[1]];
        REQUIRE(r1.at(1, 0) == 1);
        REQUIRE((r1 * r1).is_zero());
        REQUIRE(hom_ext(q20, s1.rep, c2).hom == 1);
        REQUIRE(hom_ext(q20, s1.rep, c2).ext1 == 1);
    }
    SECTION("odd parity is rejected") {
        const Quiver coni = build_quiver(geometry_conifold());
        const StringModule s = string_module(coni, 1, 1, {});
        REQUIRE_THROWS_AS(extend_cm(coni, s, 2), DomainError);
    }
}

TEST_CASE("complex differentials compose to zero on random modules") {
    // hom_ext asserts d1 o d0 = 0 and d2 o d1 = 0 internally; exercise it on
    // strings over several geometries.
    std::mt19937 rng(31);
    for (const auto& g : {geometry_conifold(), geometry_from_rows(2, 1, {0, 0, 1}),
                          geometry_example12()}) {
        const Quiver q = build_quiver(g);
        for (int it = 0; it < 10; ++it) {
            const int n0 = (int)(rng() % q.N);
            const int len = 1 + (int)(rng() % 4);
            std::vector<int> orient(len - 1);
            for (auto& o : orient) o = rng() % 2 ? 1 : -1;
            const Rep r = string_module(q, n0, n0 + len - 1, orient).rep;
            REQUIRE_NOTHROW(hom_ext(q, r, r));
        }
    }
}
