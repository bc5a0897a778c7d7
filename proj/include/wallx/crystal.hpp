#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wallx/base.hpp"
#include "wallx/quiver.hpp"
#include "wallx/series.hpp"
#include "wallx/toric.hpp"

namespace wallx {

/**
 * The window of path-basis atoms of Ae_0 reachable inside any molten crystal
 * of at most `bound` atoms: an atom in a crystal of size <= bound sits on a
 * predecessor chain of fewer than `bound` arrows, so the window is the set of
 * atoms of depth (minimal arrow count) < bound.
 *
 * Atoms are ordered by graded length (deg h = 1, deg r = 2), which every
 * arrow action strictly increases, so predecessors always precede their
 * successors. Predecessor lists are computed over a doubled search window;
 * an atom whose predecessor falls outside the window cannot occur in any
 * crystal of this size and is marked blocked.
 */
struct AtomSpace {
    Quiver quiver;
    std::vector<PathNF> atoms;  // sorted by (graded length, normal form)
    std::vector<int> vertex, depth;
    std::vector<long long> grade;
    std::vector<char> blocked;
    std::map<PathNF, int> index;
    std::vector<std::vector<std::pair<int, int>>> action;  // atom -> (arrow, target|-1)
    std::vector<std::vector<int>> preds;                   // atom -> predecessor atoms
};

inline AtomSpace atom_space(const Geometry& g, int bound) {
    if (bound < 1) fail("BadShape", "atom window bound must be >= 1");
    AtomSpace s;
    s.quiver = build_quiver(g);
    const Quiver& q = s.quiver;
    const int max_depth = bound - 1;
    const int search_depth = 2 * max_depth;  // any predecessor of a window atom lives here

    std::vector<PathNF> all{PathNF{}};
    std::vector<int> all_depth{0};
    std::map<PathNF, int> all_index{{PathNF{}, 0}};
    for (size_t i = 0; i < all.size(); ++i) {
        if (all_depth[i] == search_depth) continue;
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].from != all[i].tgt) continue;
            PathNF nxt = act(q, all[i], a);
            if (all_index.emplace(nxt, (int)all.size()).second) {
                all.push_back(nxt);
                all_depth.push_back(all_depth[i] + 1);
            }
        }
    }

    std::vector<std::pair<std::pair<long long, PathNF>, int>> window;
    for (size_t i = 0; i < all.size(); ++i)
        if (all_depth[i] <= max_depth)
            window.push_back({{graded_length(q, all[i]), all[i]}, (int)i});
    std::sort(window.begin(), window.end());
    for (const auto& [key, ai] : window) {
        const int id = (int)s.atoms.size();
        s.atoms.push_back(all[ai]);
        s.vertex.push_back(all[ai].tgt);
        s.depth.push_back(all_depth[ai]);
        s.grade.push_back(key.first);
        s.index[all[ai]] = id;
    }
    s.blocked.assign(s.atoms.size(), 0);
    s.preds.assign(s.atoms.size(), {});
    s.action.resize(s.atoms.size());
    for (size_t i = 0; i < s.atoms.size(); ++i) {
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].from != s.vertex[i]) continue;
            const PathNF nxt = act(q, s.atoms[i], a);
            const auto it = s.index.find(nxt);
            s.action[i].push_back({a, it == s.index.end() ? -1 : it->second});
        }
    }
    // Predecessors from the full search window.
    for (size_t i = 0; i < all.size(); ++i) {
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].from != all[i].tgt) continue;
            const auto it = s.index.find(act(q, all[i], a));
            if (it == s.index.end()) continue;
            const int x = it->second;
            const auto pit = s.index.find(all[i]);
            if (pit == s.index.end()) {
                s.blocked[x] = 1;  // predecessor outside the window
            } else {
                auto& p = s.preds[x];
                if (std::find(p.begin(), p.end(), pit->second) == p.end())
                    p.push_back(pit->second);
            }
        }
    }
    return s;
}

namespace detail {

inline void enumerate_downsets(const AtomSpace& s, int max_atoms, std::vector<char>& in_set,
                               std::vector<int>& dimvec, int last, int count, Series& out) {
    {
        Series::Exp e(dimvec.begin(), dimvec.end());
        out.add_term(e, 1);
    }
    if (count == max_atoms) return;
    for (int cand = last + 1; cand < (int)s.atoms.size(); ++cand) {
        if (s.blocked[cand]) continue;
        bool addable = true;
        for (int p : s.preds[cand])
            if (!in_set[p]) {
                addable = false;
                break;
            }
        if (!addable) continue;
        in_set[cand] = 1;
        ++dimvec[s.vertex[cand]];
        enumerate_downsets(s, max_atoms, in_set, dimvec, cand, count + 1, out);
        in_set[cand] = 0;
        --dimvec[s.vertex[cand]];
    }
}

}  // namespace detail

/**
 * Z^eu at the cyclic chamber: the coefficient of q^v counts predecessor-closed
 * atom sets of dimension vector v, |v| <= D, generated once each by canonical
 * augmentation in BFS order.
 */
inline Series enumerate_molten(const Geometry& g, int D) {
    if (D < 0) fail("BadShape", "degree cap must be >= 0");
    Series out(g.N, D);
    if (D == 0) {
        out.add_term(Series::Exp(g.N, 0), 1);
        return out;
    }
    const AtomSpace s = atom_space(g, D);
    std::vector<char> in_set(s.atoms.size(), 0);
    std::vector<int> dimvec(g.N, 0);
    // the recursion starts from the empty crystal; e_0 is atom 0
    detail::enumerate_downsets(s, D, in_set, dimvec, -1, 0, out);
    return out;
}

// Same output, computed by filtering all small subsets of the window for
// predecessor closure; exists only to validate the fast enumerator.
inline Series enumerate_molten_naive(const Geometry& g, int D) {
    if (D < 0) fail("BadShape", "degree cap must be >= 0");
    Series out(g.N, D);
    out.add_term(Series::Exp(g.N, 0), 1);
    if (D == 0) return out;
    const AtomSpace s = atom_space(g, D);
    const int n = (int)s.atoms.size();
    if (n > 62) fail("WindowTooLarge", "naive enumeration window exceeds 62 atoms");
    std::vector<std::uint64_t> pred_mask(n, 0);
    for (int i = 0; i < n; ++i)
        for (int p : s.preds[i]) pred_mask[i] |= 1ull << p;

    std::vector<int> pick;
    std::vector<int> dimvec(g.N, 0);
    std::uint64_t mask = 0;
    auto rec = [&](auto&& self, int start) -> void {
        if (!pick.empty()) {
            bool closed = true;
            for (int i : pick)
                if ((pred_mask[i] & mask) != pred_mask[i]) {
                    closed = false;
                    break;
                }
            if (closed) out.add_term(Series::Exp(dimvec.begin(), dimvec.end()), 1);
        }
        if ((int)pick.size() == D) return;
        for (int cand = start; cand < n; ++cand) {
            if (s.blocked[cand]) continue;
            pick.push_back(cand);
            mask |= 1ull << cand;
            ++dimvec[s.vertex[cand]];
            self(self, cand + 1);
            --dimvec[s.vertex[cand]];
            mask &= ~(1ull << cand);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Optional coefficient cache keyed by (geometry hash, D).
inline Series enumerate_molten_cached(const Geometry& g, int D,
                                      const std::optional<std::string>& cache_dir) {
    if (!cache_dir) return enumerate_molten(g, D);
    namespace fs = std::filesystem;
    const fs::path file =
        fs::path(*cache_dir) / ("crystal_" + g.hash() + "_D" + std::to_string(D) + ".json");
    if (fs::exists(file)) {
        std::ifstream in(file);
        nlohmann::json j;
        in >> j;
        Series s(j.at("vars").get<int>(), j.at("degree").get<int>());
        for (const auto& t : j.at("terms")) {
            Series::Exp e = t.at("exp").get<std::vector<int>>();
            s.add_term(e, Int(t.at("coeff").get<std::string>()));
        }
        return s;
    }
    Series s = enumerate_molten(g, D);
    std::error_code ec;
    fs::create_directories(*cache_dir, ec);
    std::ofstream out(file);
    if (out) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : s.terms())
            terms.push_back(nlohmann::json{{"exp", e}, {"coeff", c.str()}});
        nlohmann::json j{{"vars", s.nvars()}, {"degree", s.cap()}, {"terms", terms}};
        out << j.dump(2) << "\n";
    }
    return s;
}

}  // namespace wallx
