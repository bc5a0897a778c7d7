#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "wallx/quiver.hpp"

using namespace wallx;

TEST_CASE("build_quiver shapes") {
    SECTION("conifold") {
        const Quiver q = build_quiver(std::vector<int>{-1, -1});
        REQUIRE(q.arrows.size() == 4);
        REQUIRE(q.ir.empty());
        REQUIRE(q.potential.size() == 2);
        for (const auto& t : q.potential) REQUIRE(t.cycle.size() == 4);
        REQUIRE(q.potential[0].sign == -q.potential[1].sign);
    }
    SECTION("N=1") {
        const Quiver q = build_quiver(std::vector<int>{1});
        REQUIRE(q.arrows.size() == 3);
        REQUIRE(q.potential.size() == 2);
        for (const auto& t : q.potential) REQUIRE(t.cycle.size() == 3);
        REQUIRE(q.potential[0].sign == -q.potential[1].sign);
    }
    SECTION("example geometry") {
        const Quiver q = build_quiver(geometry_example12());
        REQUIRE(q.arrows.size() == 14);
        REQUIRE(q.ir == std::vector<int>{0, 3});
    }
    SECTION("odd tau rejected") {
        REQUIRE_THROWS_AS(build_quiver(std::vector<int>{-1, 1}), DomainError);
    }
    SECTION("arrow counts are symmetric") {
        for (const auto& g :
             {geometry_conifold(), geometry_example12(), geometry_from_rows(3, 2, {0, 1, 0, 0, 1})}) {
            const Quiver q = build_quiver(g);
            std::map<std::pair<int, int>, int> cnt;
            for (const auto& a : q.arrows) cnt[{a.from, a.to}]++;
            for (const auto& [e, c] : cnt) REQUIRE(cnt[{e.second, e.first}] == c);
        }
    }
}

TEST_CASE("normalize_path") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("loop h-_{1/2} o h+_{1/2} at 0 is W_0") {
        const PathNF nf = normalize_path(coni, {coni.hplus[0], coni.hminus[0]});
        REQUIRE(nf == PathNF{0, 0, true, 0, 0, 1});
    }
    SECTION("h+_{3/2} o h+_{1/2} is X_0") {
        const PathNF nf = normalize_path(coni, {coni.hplus[0], coni.hplus[1]});
        REQUIRE(nf == PathNF{0, 0, true, 1, 0, 0});
    }
    SECTION("empty word is the idempotent") {
        const PathNF nf = normalize_path(coni, {}, 1);
        REQUIRE(nf == PathNF{1, 1, true, 0, 0, 0});
        REQUIRE_THROWS_AS(normalize_path(coni, {}), DomainError);
    }
    SECTION("non-composable words rejected") {
        REQUIRE_THROWS_AS(normalize_path(coni, {coni.hplus[0], coni.hplus[0]}), DomainError);
    }
}

TEST_CASE("path_basis") {
    const Quiver coni = build_quiver(geometry_conifold());
    SECTION("loops at 0 up to length 2") {
        const auto basis = path_basis(coni, 0, 0, 2);
        REQUIRE(basis.size() == 5);  // e, X, Y, Z, W
    }
    SECTION("two arrows 0 -> 1 at length 1") {
        const auto basis = path_basis(coni, 0, 1, 1);
        REQUIRE(basis.size() == 2);
    }
    SECTION("max_length 0 gives the idempotent") {
        const auto basis = path_basis(coni, 1, 1, 0);
        REQUIRE(basis.size() == 1);
        REQUIRE(basis[0] == PathNF{1, 1, true, 0, 0, 0});
    }
}

TEST_CASE("frame") {
    const FramedQuiver f = frame(build_quiver(geometry_conifold()));
    REQUIRE(f.vertex_count() == 3);
    REQUIRE(f.arrow_count() == 5);
    REQUIRE(frame(build_quiver(geometry_c3())).vertex_count() == 2);
    REQUIRE(frame(build_quiver(geometry_c3())).arrow_count() == 4);
    const FramedQuiver fe = frame(build_quiver(geometry_example12()));
    REQUIRE(fe.vertex_count() == 7);
    REQUIRE(fe.arrow_count() == 15);
    REQUIRE(fe.base.potential.size() == build_quiver(geometry_example12()).potential.size());
}

namespace {

std::vector<std::vector<int>> composable_words(const Quiver& q, int vertex, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> w;
    std::function<void(int, int)> rec = [&](int v, int l) {
        if (l == len) {
            out.push_back(w);
            return;
        }
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].from != v) continue;
            w.push_back(a);
            rec(q.arrows[a].to, l + 1);
            w.pop_back();
        }
    };
    rec(vertex, 0);
    return out;
}

}  // namespace

TEST_CASE("normal form properties") {
    const std::vector<Geometry> gs = {geometry_conifold(), geometry_c3(),
                                      geometry_from_rows(2, 0, {0, 0}), geometry_example12()};
    for (const auto& g : gs) {
        const Quiver q = build_quiver(g);

        SECTION("central loops commute, X_k Y_k = Z^{N1} W^{N0}: N=" + std::to_string(g.N) +
                " Ir=" + std::to_string(g.Ir.size())) {
            for (int k = 0; k < q.N; ++k) {
                auto zw = q.word_z(k);
                auto wz = q.word_w(k);
                std::vector<int> zfirst = zw, wfirst = wz;
                wfirst.insert(wfirst.end(), zw.begin(), zw.end());
                zfirst.insert(zfirst.end(), wz.begin(), wz.end());
                REQUIRE(normalize_path(q, zfirst, k) == normalize_path(q, wfirst, k));
                REQUIRE(normalize_path(q, zfirst, k) == PathNF{k, k, true, 0, 1, 1});

                // X_k o Y_k: traverse Y then X
                std::vector<int> word = canonical_word(q, PathNF{k, k, false, 1, 0, 0});
                auto xw = canonical_word(q, PathNF{k, k, true, 1, 0, 0});
                word.insert(word.end(), xw.begin(), xw.end());
                REQUIRE(normalize_path(q, word, k) == PathNF{k, k, true, 0, g.N1, g.N0});
            }
        }

        SECTION("idempotence and rewrite invariance: N=" + std::to_string(g.N) + " Ir=" +
                std::to_string(g.Ir.size())) {
            std::mt19937 rng(17);
            for (int it = 0; it < 200; ++it) {
                // random composable word
                std::vector<int> w;
                int v = (int)(rng() % q.N);
                const int src = v;
                for (int l = 0; l < 6; ++l) {
                    std::vector<int> outs;
                    for (int a = 0; a < (int)q.arrows.size(); ++a)
                        if (q.arrows[a].from == v) outs.push_back(a);
                    const int a = outs[rng() % outs.size()];
                    w.push_back(a);
                    v = q.arrows[a].to;
                }
                const PathNF nf = normalize_path(q, w, src);
                REQUIRE(normalize_path(q, canonical_word(q, nf), src) == nf);  // idempotent
                // apply one relation rewrite anywhere it matches
                for (const auto& rel : q.relations) {
                    for (size_t p = 0; p + rel.lhs.size() <= w.size(); ++p) {
                        if (!std::equal(rel.lhs.begin(), rel.lhs.end(), w.begin() + p)) continue;
                        std::vector<int> w2(w.begin(), w.begin() + p);
                        w2.insert(w2.end(), rel.rhs.begin(), rel.rhs.end());
                        w2.insert(w2.end(), w.begin() + p + rel.lhs.size(), w.end());
                        REQUIRE(normalize_path(q, w2, src) == nf);
                    }
                }
            }
        }

        SECTION("left action is total and strictly raises the grading: N=" +
                std::to_string(g.N) + " Ir=" + std::to_string(g.Ir.size())) {
            for (const auto& w : composable_words(q, 0, 3)) {
                const PathNF nf = normalize_path(q, w, 0);
                for (int a = 0; a < (int)q.arrows.size(); ++a) {
                    if (q.arrows[a].from != nf.tgt) continue;
                    const PathNF next = act(q, nf, a);
                    const int dega = q.arrows[a].kind == Arrow::Loop ? 2 : 1;
                    REQUIRE(graded_length(q, next) == graded_length(q, nf) + dega);
                }
            }
        }
    }
}
