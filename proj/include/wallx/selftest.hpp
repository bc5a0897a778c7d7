#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wallx/crystal.hpp"
#include "wallx/engine.hpp"
#include "wallx/homalg.hpp"
#include "wallx/quiver.hpp"
#include "wallx/rootlat.hpp"
#include "wallx/series.hpp"
#include "wallx/toric.hpp"

namespace wallx::selftest {

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

namespace detail {

struct Check {
    bool ok = true;
    std::string msg;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            msg = what;
        }
    }
};

inline Geometry geometry_20() { return geometry_from_rows(2, 0, {0, 0}); }
inline Geometry geometry_21a() { return geometry_from_rows(2, 1, {0, 0, 1}); }  // Ir = {1}
inline Geometry geometry_21b() { return geometry_from_rows(2, 1, {0, 1, 0}); }  // Ir = {0}
inline Geometry geometry_31() { return geometry_from_rows(3, 1, {0, 0, 0, 1}); }

inline Geometry random_geometry(std::mt19937& rng, int max_N = 8) {
    const int N = 1 + (int)(rng() % max_N);
    const int N1 = (int)(rng() % (N / 2 + 1));
    const int N0 = N - N1;
    std::vector<int> yseq(N0, 0);
    yseq.insert(yseq.end(), N1, 1);
    std::shuffle(yseq.begin(), yseq.end(), rng);
    return geometry_from_rows(N0, N1, yseq);
}

inline std::vector<Geometry> standard_geometries() {
    std::vector<Geometry> gs = {geometry_example12(), geometry_conifold(), geometry_20(),
                                geometry_21a(), geometry_21b()};
    std::mt19937 rng(0xA5u);
    for (int i = 0; i < 20; ++i) gs.push_back(random_geometry(rng));
    return gs;
}

// --- word rewriting over quiver relations (for AC-3) ---

using Word = std::vector<int>;

struct WordRel {
    Word lhs, rhs;
};

inline std::vector<WordRel> family_relations(const Quiver& q) {
    std::vector<WordRel> out;
    for (const auto& r : q.relations) out.push_back({r.lhs, r.rhs});
    return out;
}

inline std::vector<WordRel> derivative_relations(const Quiver& q, Check& ck) {
    std::vector<WordRel> out;
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
        std::vector<std::pair<int, Word>> occ;
        for (const auto& term : q.potential) {
            const int m = (int)term.cycle.size();
            for (int p = 0; p < m; ++p) {
                if (term.cycle[p] != a) continue;
                Word w;
                for (int s = 1; s < m; ++s) w.push_back(term.cycle[(p + s) % m]);
                occ.push_back({term.sign, std::move(w)});
            }
        }
        ck.expect(occ.size() == 2 && occ[0].first == -occ[1].first,
                  "arrow " + q.arrows[a].id + " occurs " + std::to_string(occ.size()) +
                      " times in the potential");
        if (occ.size() != 2) continue;
        WordRel r;
        r.lhs = occ[0].first > 0 ? occ[0].second : occ[1].second;
        r.rhs = occ[0].first > 0 ? occ[1].second : occ[0].second;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<Word> one_step_rewrites(const Word& w, const std::vector<WordRel>& rules) {
    std::vector<Word> out;
    auto splice = [&](const Word& pat, const Word& rep) {
        if (pat.size() > w.size()) return;
        for (size_t p = 0; p + pat.size() <= w.size(); ++p) {
            if (!std::equal(pat.begin(), pat.end(), w.begin() + p)) continue;
            Word nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), rep.begin(), rep.end());
            nw.insert(nw.end(), w.begin() + p + pat.size(), w.end());
            out.push_back(std::move(nw));
        }
    };
    for (const auto& r : rules) {
        splice(r.lhs, r.rhs);
        splice(r.rhs, r.lhs);
    }
    return out;
}

inline bool words_equivalent(const Word& from, const Word& to, const std::vector<WordRel>& rules,
                             size_t node_cap = 20000) {
    size_t maxlen = std::max(from.size(), to.size());
    for (const auto& r : rules) maxlen = std::max({maxlen, r.lhs.size(), r.rhs.size()});
    maxlen += 4;
    std::set<Word> seen{from};
    std::vector<Word> frontier{from};
    while (!frontier.empty() && seen.size() < node_cap) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            if (w == to) return true;
            for (auto& nw : one_step_rewrites(w, rules)) {
                if (nw.size() > maxlen) continue;
                if (seen.insert(nw).second) next.push_back(std::move(nw));
            }
        }
        frontier = std::move(next);
    }
    return seen.count(to) > 0;
}

inline void all_words_upto(const Quiver& q, int maxlen,
                           const std::function<void(const Word&, int)>& visit) {
    Word w;
    std::function<void(int, int)> rec = [&](int vertex, int len) {
        visit(w, vertex);
        if (len == maxlen) return;
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].from != vertex) continue;
            w.push_back(a);
            rec(q.arrows[a].to, len + 1);
            w.pop_back();
        }
    };
    for (int v = 0; v < q.N; ++v) rec(v, 0);
}

// zeta on the wall of alpha only: zeta.beta != 0 for every real root of
// height <= ht(alpha) and every componentwise 0 < beta < alpha.
inline Zeta wall_zeta(const Quiver& q, const DimVec& alpha, Check& ck) {
    Rat norm = 0;
    for (auto v : alpha) norm += Rat(v * v);
    const auto roots = positive_real_roots(q.N, [&] {
        long long h = 0;
        for (auto v : alpha) h += v;
        return h;
    }());
    for (int t = 2; t < 2000; ++t) {
        Zeta u(q.N);
        Rat ua = 0;
        Rat p = 1;
        for (int k = 0; k < q.N; ++k) {
            u[k] = p;
            ua += p * Rat(alpha[k]);
            p *= t;
        }
        Zeta z(q.N);
        for (int k = 0; k < q.N; ++k) z[k] = u[k] - ua / norm * Rat(alpha[k]);
        bool good = true;
        for (const auto& r : roots)
            if (r.v != alpha && dot(z, r.v) == 0) good = false;
        // all componentwise sub-vectors
        DimVec beta(q.N, 0);
        std::function<void(int)> rec = [&](int k) {
            if (!good) return;
            if (k == q.N) {
                bool zero = true, full = true;
                for (int i = 0; i < q.N; ++i) {
                    if (beta[i] != 0) zero = false;
                    if (beta[i] != alpha[i]) full = false;
                }
                if (!zero && !full && dot(z, beta) == 0) good = false;
                return;
            }
            for (long long v = 0; v <= alpha[k] && good; ++v) {
                beta[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
        if (good) return z;
    }
    ck.expect(false, "could not construct a generic wall parameter");
    return Zeta(q.N, Rat(0));
}

template <typename F>
CriterionResult run(const std::string& id, F&& body) {
    CriterionResult r;
    r.id = id;
    Check ck;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(ck);
        r.pass = ck.ok;
        r.detail = ck.ok ? "ok" : ck.msg;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
    return r;
}

inline std::string show_dims(const Divisor& d) {
    std::ostringstream os;
    os << "[";
    for (auto v : d.row1) os << v << " ";
    os << "/ ";
    for (auto v : d.row0) os << v << " ";
    os << "]";
    return os.str();
}

}  // namespace detail

// AC-1: the printed divisor matrices of the worked (4,2) example, bit exact.
inline CriterionResult ac1() {
    using detail::Check;
    return detail::run("AC-1", [](Check& ck) {
        const Geometry g = geometry_example12();
        auto mk = [&](std::vector<long long> r1, std::vector<long long> r0) {
            Divisor d;
            d.row1 = std::move(r1);
            d.row0 = std::move(r0);
            return d;
        };
        const std::vector<Divisor> eplus = {
            mk({0, 0, 0}, {0, 0, 0, 0, 1}), mk({0, 0, 1}, {0, 0, 0, 0, 0}),
            mk({0, 0, 0}, {0, 0, 0, 1, 1}), mk({0, 0, 0}, {0, 0, 1, 1, 1}),
            mk({0, 1, 1}, {0, 0, 0, 0, 0}), mk({0, 0, 0}, {0, 1, 1, 1, 1})};
        const std::vector<Divisor> fplus = {
            mk({0, 0, 0}, {0, 0, 0, 0, 1}), mk({0, 0, 1}, {0, 0, 0, 0, 1}),
            mk({0, 0, 1}, {0, 0, 0, 1, 2}), mk({0, 0, 1}, {0, 0, 1, 2, 3}),
            mk({0, 1, 2}, {0, 0, 1, 2, 3}), mk({0, 1, 2}, {0, 1, 2, 3, 4})};
        for (int t = 0; t < 6; ++t) {
            const Divisor e = divisor(g, DivisorKind::EPlus, 2 * t + 1);
            ck.expect(e == eplus[t], "E+_{" + std::to_string(2 * t + 1) + "/2} = " +
                                         detail::show_dims(e));
            const Divisor f = divisor(g, DivisorKind::FPlus, t + 1);
            ck.expect(f == fplus[t],
                      "F+_" + std::to_string(t + 1) + " = " + detail::show_dims(f));
        }
        const Divisor ftot = divisor(g, DivisorKind::FPlusTotal);
        ck.expect(ftot == mk({0, 1, 5}, {0, 0, 2, 5, 10}),
                  "F+ total = " + detail::show_dims(ftot));
    });
}

// AC-2: global linearity / convexity of the standard support functions and
// the local difference identity, over the fixed and randomized geometry set.
inline CriterionResult ac2() {
    using detail::Check;
    return detail::run("AC-2", [](Check& ck) {
        for (const auto& g : detail::standard_geometries()) {
            for (int t = 0; t < g.N; ++t) {
                const Divisor d = divisor(g, DivisorKind::EPlus, 2 * t + 1) +
                                  divisor(g, DivisorKind::EMinus, 2 * t + 1);
                ck.expect(is_globally_linear(g, support_function(g, d)),
                          "psi(E+_i + E-_i) not globally linear at t=" + std::to_string(t));
            }
            const SupportFn sn = support_function(g, divisor(g, DivisorKind::FPlus, g.N));
            ck.expect(is_globally_linear(g, sn), "psi(F+_N) not globally linear");
            for (const auto& f : sn.form)
                ck.expect(f == std::array<long long, 3>{-1, 0, 0}, "psi(F+_N) != -x");
            const Divisor ftot = divisor(g, DivisorKind::FPlusTotal);
            ck.expect(is_upper_convex(g, support_function(g, ftot)),
                      "psi(F+) not upper convex");
            for (int t = 0; t + 1 < g.N; ++t) {
                auto diff = [&](int u) {
                    const auto& s = g.sigma[u];
                    return ftot.at(s.y, (s.x2 + 1) / 2) - ftot.at(s.y, (s.x2 - 1) / 2);
                };
                ck.expect(diff(t) == diff(t + 1) + 1,
                          "local difference identity fails at t=" + std::to_string(t));
            }
            if (!ck.ok) return;
        }
    });
}

// AC-3: structural quiver checks and ideal agreement between the potential's
// cyclic derivatives and the five relation families.
inline CriterionResult ac3() {
    using detail::Check;
    using detail::Word;
    return detail::run("AC-3", [](Check& ck) {
        for (const auto& g : detail::standard_geometries()) {
            const Quiver q = build_quiver(g);
            ck.expect((int)q.arrows.size() == 2 * g.N + (int)g.Ir.size(),
                      "arrow count != 2N + |Ir|");
            ck.expect((g.N - (int)g.Ir.size()) % 2 == 0, "N - |Ir| odd");
            std::map<std::pair<int, int>, int> cnt;
            for (const auto& a : q.arrows) cnt[{a.from, a.to}]++;
            for (const auto& [e, c] : cnt)
                ck.expect(cnt[{e.second, e.first}] == c, "arrow counts not symmetric");

            const auto fam = detail::family_relations(q);
            const auto der = detail::derivative_relations(q, ck);
            for (const auto& r : der)
                ck.expect(detail::words_equivalent(r.lhs, r.rhs, fam),
                          "a cyclic derivative is not in the relation ideal");
            for (const auto& r : fam)
                ck.expect(detail::words_equivalent(r.lhs, r.rhs, der),
                          "a relation family is not in the derivative ideal");

            // normal form invariance under single rewrites, all words <= 6
            detail::all_words_upto(q, 6, [&](const Word& w, int vertex) {
                if (!ck.ok) return;
                const PathNF nf = normalize_path(q, w, vertex);
                for (const auto& nw : detail::one_step_rewrites(w, fam))
                    ck.expect(normalize_path(q, nw, vertex) == nf,
                              "normal form changes under a relation rewrite");
            });
            if (!ck.ok) return;
        }
    });
}

// AC-4: unique stable strings per real root with the parity of their
// self-extensions, the C_m lemmas, and the framed Euler pairing.
inline CriterionResult ac4() {
    using detail::Check;
    return detail::run("AC-4", [](Check& ck) {
        const std::vector<Geometry> gs = {geometry_conifold(), detail::geometry_20(),
                                          detail::geometry_21a(), geometry_example12()};
        for (const auto& g : gs) {
            const Quiver q = build_quiver(g);
            for (const auto& root : positive_real_roots(g.N, 6)) {
                Zeta z = detail::wall_zeta(q, root.v, ck);
                if (!ck.ok) return;
                StringModule s;
                try {
                    s = find_stable_string(q, z, root.v);
                } catch (const DomainError& e) {
                    ck.expect(false, std::string("find_stable_string: ") + e.what());
                    return;
                }
                long long odd = 0;
                for (int k = 0; k < g.N; ++k)
                    if (!g.in_Ir(k)) odd += root.v[k];
                const auto ext = hom_ext(q, s.rep, s.rep);
                ck.expect(ext.ext1 == (odd % 2 ? 0 : 1),
                          "ext1(C,C) does not match the parity rule");
                if (odd % 2 == 0) {
                    for (int m = 2; m <= 3; ++m) {
                        const Rep cm = extend_cm(q, s, m);
                        ck.expect(check_relations(q, cm), "C_m violates relations");
                        const auto e = hom_ext(q, s.rep, cm);
                        ck.expect(e.hom == 1 && e.ext1 == 1,
                                  "hom/ext1(C, C_m) != 1 at m=" + std::to_string(m));
                    }
                }
                if (!ck.ok) return;
            }
        }

        // Euler pairing on randomized relation-satisfying framed pairs.
        std::mt19937 rng(0xE9u);
        auto random_module = [&](const Geometry& g, const Quiver& q) -> Rep {
            const int mode = (int)(rng() % 3);
            Rep r;
            if (mode == 0) {
                const AtomSpace sp = atom_space(g, 4);
                std::vector<int> in(sp.atoms.size(), 0);
                std::vector<int> chosen;
                const int want = (int)(rng() % 5);
                for (int step = 0; step < want; ++step) {
                    std::vector<int> addable;
                    for (int i = 0; i < (int)sp.atoms.size(); ++i) {
                        if (in[i]) continue;
                        bool ok = true;
                        for (int p : sp.preds[i]) ok = ok && in[p];
                        if (ok) addable.push_back(i);
                    }
                    if (addable.empty()) break;
                    const int pick = addable[rng() % addable.size()];
                    in[pick] = 1;
                    chosen.push_back(pick);
                }
                std::vector<int> dims(g.N, 0);
                std::vector<int> local(sp.atoms.size(), -1);
                for (int i : chosen) local[i] = dims[sp.vertex[i]]++;
                r = rep_zero(q, dims);
                for (int i : chosen)
                    for (auto [a, tgt] : sp.action[i])
                        if (tgt >= 0 && in[tgt])
                            r.mat[a].at(local[tgt], local[i]) = 1;
            } else if (mode == 1) {
                const int n0 = (int)(rng() % q.N);
                const int len = 1 + (int)(rng() % 4);
                std::vector<int> orient(len - 1);
                for (auto& o : orient) o = rng() % 2 ? 1 : -1;
                r = string_module(q, n0, n0 + len - 1, orient).rep;
            } else {
                std::vector<int> dims(g.N, 0);
                dims[rng() % g.N] = (int)(rng() % 2);
                r = rep_zero(q, dims);
            }
            r.framed = true;
            r.dim_inf = (int)(rng() % 2);
            r.framing = Mat(r.dim.empty() ? 0 : r.dim[0], r.dim_inf);
            for (int i = 0; i < r.framing.rows; ++i)
                for (int j = 0; j < r.framing.cols; ++j)
                    r.framing.at(i, j) = Rat((long long)(rng() % 5) - 2);
            return r;
        };
        const std::vector<Geometry> pool = {geometry_conifold(), detail::geometry_20(),
                                            detail::geometry_21a(), geometry_example12()};
        int done = 0;
        while (done < 100) {
            const Geometry& g = pool[rng() % pool.size()];
            const Quiver q = build_quiver(g);
            const Rep E = random_module(g, q);
            const Rep F = random_module(g, q);
            if (E.total_dim() > 6 || F.total_dim() > 6) continue;
            const auto ef = hom_ext(q, E, F);
            const auto fe = hom_ext(q, F, E);
            const long long lhs = ef.hom - ef.ext1 + fe.ext1 - fe.hom;
            const long long rhs = (long long)E.dim[0] * F.dim_inf - (long long)E.dim_inf * F.dim[0];
            ck.expect(lhs == rhs, "Euler pairing identity fails");
            if (!ck.ok) return;
            ++done;
        }
    });
}

namespace detail {

// Restrict a PT table to keys whose module-variable preimage exists within
// the cap, under the given orientation.
inline GradedTable restrict_to_module_window(const GradedTable& t, int N, int D,
                                             BetaOrientation orient) {
    GradedTable out;
    for (const auto& [key, c] : t) {
        const int n = key.first;
        bool valid = n >= 0;
        long long total = n;
        for (int b : key.second) {
            const long long vk = orient == BetaOrientation::BetaMinus ? n - b : n + b;
            valid = valid && vk >= 0;
            total += vk;
        }
        if (valid && total <= D) out.emplace(key, c);
    }
    return out;
}

inline bool ac5_matches(const Geometry& g, int D, BetaOrientation orient) {
    const Series zs = z_signed(g, pt_zeta(g), D, ZMode::RelativeToTrivial);
    const GradedTable engine_side = to_sheaf_grading(zs, orient);
    const GradedTable closed_side =
        restrict_to_module_window(z_pt_macmahon(g, D), g.N, D, orient);
    return engine_side == closed_side;
}

}  // namespace detail

// AC-5: the signed PT-chamber product regrades onto the MacMahon closed form
// under exactly one beta-orientation, uniformly across geometries.
inline CriterionResult ac5() {
    using detail::Check;
    return detail::run("AC-5", [](Check& ck) {
        const Geometry coni = geometry_conifold();
        const bool minus_ok = detail::ac5_matches(coni, 6, BetaOrientation::BetaMinus);
        const bool plus_ok = detail::ac5_matches(coni, 6, BetaOrientation::BetaPlus);
        ck.expect(minus_ok != plus_ok, "expected exactly one matching beta-orientation");
        const BetaOrientation pinned =
            minus_ok ? BetaOrientation::BetaMinus : BetaOrientation::BetaPlus;
        ck.expect(pinned == kPinnedBetaOrientation,
                  "matching orientation differs from the pinned one");
        for (const auto& g : {detail::geometry_21a(), detail::geometry_21b(), detail::geometry_31()})
            ck.expect(detail::ac5_matches(g, 6, pinned),
                      "pinned orientation does not reconcile N0=" + std::to_string(g.N0) +
                          ",N1=" + std::to_string(g.N1));
    });
}

// AC-6: crystal oracle vs. the closed-form assembly (M(q)^N, PT product,
// crossing factors), orientation frozen on the conifold at D=4 first.
inline CriterionResult ac6() {
    using detail::Check;
    return detail::run("AC-6", [](Check& ck) {
        const Geometry coni = geometry_conifold();
        const Geometry g20 = detail::geometry_20();
        const Zeta cyc2(2, Rat(-1));
        ck.expect(enumerate_molten_naive(coni, 5) == enumerate_molten(coni, 5),
                  "naive/fast enumerators disagree on the conifold at D=5");
        ck.expect(enumerate_molten_naive(g20, 4) == enumerate_molten(g20, 4),
                  "naive/fast enumerators disagree on (2,0) at D=4");
        ck.expect(z_eu(coni, cyc2, 4, ZMode::AbsoluteWithDtpt) == enumerate_molten(coni, 4),
                  "assembly orientation check fails on the conifold at D=4");
        ck.expect(z_eu(coni, cyc2, 6, ZMode::AbsoluteWithDtpt) == enumerate_molten(coni, 6),
                  "oracle vs closed form fails on the conifold at D=6");
        ck.expect(z_eu(g20, cyc2, 6, ZMode::AbsoluteWithDtpt) == enumerate_molten(g20, 6),
                  "oracle vs closed form fails on (2,0) at D=6");
    });
}

// AC-7: the rank-one specialization reproduces plane-partition counts.
inline CriterionResult ac7() {
    using detail::Check;
    return detail::run("AC-7", [](Check& ck) {
        const Series crystal = enumerate_molten(geometry_c3(), 8);
        const Series mm = macmahon({0}, {1}, +1, +1, 1, 8);
        ck.expect(crystal == mm, "crystal counts differ from the MacMahon series");
        ck.expect(crystal.coeff({2}) == 3 && crystal.coeff({3}) == 6,
                  "spot values of plane-partition counts are wrong");
    });
}

// AC-8: chamber independence, trivial walls, involutions, pairing invariance.
inline CriterionResult ac8() {
    using detail::Check;
    return detail::run("AC-8", [](Check& ck) {
        std::mt19937 rng(0xC3u);
        auto rand_rat = [&](int span) {
            return Rat((long long)(rng() % (2 * span + 1)) - span, 1 + (long long)(rng() % 7));
        };
        const std::vector<Geometry> gs = {geometry_conifold(), detail::geometry_21a(),
                                          geometry_example12()};
        const int D = 4;
        for (const auto& g : gs) {
            int pairs = 0, guard = 0;
            const auto roots = positive_real_roots(g.N, D);
            while (pairs < 10 && guard++ < 500) {
                Zeta z(g.N);
                for (auto& x : z) x = rand_rat(9);
                try {
                    require_generic(g.N, z, D);
                } catch (const DomainError&) {
                    continue;
                }
                Zeta z2 = z;
                z2[rng() % g.N] += Rat(1, 100003);
                bool same = true;
                try {
                    require_generic(g.N, z2, D);
                } catch (const DomainError&) {
                    continue;
                }
                if (!((zeta_sum(z) < 0) == (zeta_sum(z2) < 0))) continue;
                for (const auto& r : roots)
                    same = same && ((dot(z, r.v) > 0) == (dot(z2, r.v) > 0));
                if (!same) continue;
                const ZMode mode = zeta_sum(z) < 0 ? ZMode::RelativeToCyclic
                                                   : ZMode::RelativeToTrivial;
                ck.expect(z_eu(g, z, D, mode) == z_eu(g, z2, D, mode),
                          "z_eu differs within one chamber");
                if (!ck.ok) return;
                ++pairs;
            }
            ck.expect(pairs == 10, "could not build 10 in-chamber parameter pairs");
            for (const auto& r : positive_real_roots(g.N, 6))
                if (r.v[0] == 0)
                    ck.expect(wall_factor_eu(g, r.v, 6) == Series::one(g.N, 6),
                              "wall factor with alpha_0 = 0 is not 1");
            if (!ck.ok) return;
        }

        for (int it = 0; it < 1000; ++it) {
            const int N = 1 + (int)(rng() % 8);
            const int k = (int)(rng() % N);
            DimVec v(N);
            for (auto& x : v) x = (long long)(rng() % 11) - 5;
            Zeta z(N);
            for (auto& x : z) x = rand_rat(9);
            ck.expect(mutate_dimvec(k, mutate_dimvec(k, v)) == v, "dimvec reflection not involutive");
            ck.expect(mutate_param(k, mutate_param(k, z)) == z, "param reflection not involutive");
            ck.expect(dot(z, v) == dot(mutate_param(k, z), mutate_dimvec(k, v)),
                      "pairing not invariant under mutation");
            std::vector<int> tau(N, 1);
            int flips = 0;
            for (auto& t : tau)
                if (rng() % 2) {
                    t = -1;
                    ++flips;
                }
            if (flips % 2) tau[0] *= -1;
            ck.expect(mutate_tau(k, mutate_tau(k, tau)) == tau, "tau mutation not involutive");
            if (!ck.ok) return;
        }
    });
}

inline std::vector<CriterionResult> run_acceptance() {
    return {ac1(), ac2(), ac3(), ac4(), ac5(), ac6(), ac7(), ac8()};
}

}  // namespace wallx::selftest
