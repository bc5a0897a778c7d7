#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "wallx/base.hpp"
#include "wallx/linalg.hpp"
#include "wallx/quiver.hpp"
#include "wallx/rootlat.hpp"

namespace wallx {

/**
 * Finite dimensional (framed) module: one rational matrix per arrow, sized
 * dim[to] x dim[from], plus an optional framing map C^{dim_inf} -> V_0.
 */
struct Rep {
    std::vector<int> dim;       // per quiver vertex
    int dim_inf = 0;            // dimension at the framing vertex
    bool framed = false;
    std::vector<Mat> mat;       // indexed like Quiver::arrows
    Mat framing;                // dim[0] x dim_inf

    int total_dim() const {
        int s = dim_inf;
        for (int d : dim) s += d;
        return s;
    }
};

inline Rep rep_zero(const Quiver& q, const std::vector<int>& dims, bool framed = false,
                    int dim_inf = 0) {
    if ((int)dims.size() != q.N) fail("BadShape", "dimension vector has wrong length");
    Rep r;
    r.dim = dims;
    r.framed = framed;
    r.dim_inf = framed ? dim_inf : 0;
    for (const auto& a : q.arrows) r.mat.emplace_back(dims[a.to], dims[a.from]);
    r.framing = Mat(dims.empty() ? 0 : dims[0], r.dim_inf);
    return r;
}

// Product of the arrow matrices along a traversal-order word.
inline Mat eval_path(const Quiver& q, const Rep& r, const std::vector<int>& word, int src) {
    Mat m = Mat::identity(r.dim[src]);
    int cur = src;
    for (int a : word) {
        const Arrow& ar = q.arrows.at(a);
        if (ar.from != cur) fail("NotComposable", "path does not compose in eval_path");
        m = r.mat[a] * m;
        cur = ar.to;
    }
    return m;
}

inline bool check_relations(const Quiver& q, const Rep& r) {
    for (const auto& rel : q.relations) {
        const int src = q.source_of(rel.lhs);
        if (!(eval_path(q, r, rel.lhs, src) == eval_path(q, r, rel.rhs, src))) return false;
    }
    return true;
}

struct StringModule {
    Rep rep;
    long long n0 = 0, n1 = 0;
    std::vector<int> orient;  // +1 / -1 for C(j), j = n0+1/2 .. n1-1/2
};

/**
 * String module on a basis v_{n0}..v_{n1}, v_n at vertex n mod N; consecutive
 * basis vectors are linked by h+ (orientation +1) or h- (-1), loops act by 0.
 */
inline StringModule string_module(const Quiver& q, long long n0, long long n1,
                                  const std::vector<int>& orientation) {
    if (n1 < n0) fail("BadShape", "string needs n0 <= n1");
    if ((long long)orientation.size() != n1 - n0)
        fail("BadShape", "orientation word must have length n1-n0");
    auto vtx = [&](long long n) { return (int)(((n % q.N) + q.N) % q.N); };
    std::vector<int> dims(q.N, 0);
    std::vector<int> local(n1 - n0 + 1);
    for (long long n = n0; n <= n1; ++n) local[n - n0] = dims[vtx(n)]++;
    StringModule s;
    s.rep = rep_zero(q, dims);
    s.n0 = n0;
    s.n1 = n1;
    s.orient = orientation;
    for (long long p = n0; p < n1; ++p) {
        const int t = vtx(p);
        if (orientation[p - n0] > 0)
            s.rep.mat[q.hplus[t]].at(local[p + 1 - n0], local[p - n0]) = 1;
        else
            s.rep.mat[q.hminus[t]].at(local[p - n0], local[p + 1 - n0]) = 1;
    }
    return s;
}

namespace detail {

struct CoordRep {
    int nbasis = 0;
    std::vector<int> vertex_of;                  // basis -> quiver vertex
    std::vector<std::vector<int>> arrow_target;  // basis -> per-arrow target basis or -1
    std::vector<int> framing_support;            // basis indices hit by the framing
    std::vector<std::vector<int>> basis_at;      // vertex -> basis indices
};

inline CoordRep coordinatize(const Quiver& q, const Rep& r) {
    CoordRep c;
    c.basis_at.resize(q.N);
    for (int k = 0; k < q.N; ++k)
        for (int i = 0; i < r.dim[k]; ++i) {
            c.basis_at[k].push_back(c.nbasis);
            c.vertex_of.push_back(k);
            ++c.nbasis;
        }
    c.arrow_target.assign(c.nbasis, std::vector<int>(q.arrows.size(), -1));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Mat& m = r.mat[a];
        for (int j = 0; j < m.cols; ++j) {
            int hits = 0, row = -1;
            for (int i = 0; i < m.rows; ++i) {
                if (m.at(i, j) == 0) continue;
                if (m.at(i, j) != 1) fail("NotCoordinateRep", "matrix entry not in {0,1}");
                ++hits;
                row = i;
            }
            if (hits > 1) fail("NotCoordinateRep", "arrow image is not a basis vector");
            if (hits == 1)
                c.arrow_target[c.basis_at[q.arrows[a].from][j]][a] =
                    c.basis_at[q.arrows[a].to][row];
        }
    }
    if (r.framed) {
        for (int j = 0; j < r.framing.cols; ++j)
            for (int i = 0; i < r.framing.rows; ++i) {
                if (r.framing.at(i, j) == 0) continue;
                if (r.framing.at(i, j) != 1) fail("NotCoordinateRep", "framing entry not in {0,1}");
                c.framing_support.push_back(c.basis_at[0][i]);
            }
    }
    return c;
}

}  // namespace detail

/**
 * Stability over T-invariant (= basis subset) submodules. Unframed: every
 * arrow-closed proper nonzero subset S has zeta.dim(S) < 0. Framed: (A) every
 * arrow-closed nonzero subset has zeta.dim(S) < 0, and (B) every arrow-closed
 * proper subset containing the framing support has zeta.dim(S) < zeta.dim(V).
 */
inline bool is_stable_tinv(const Quiver& q, const Rep& r, const Zeta& zeta) {
    if ((int)zeta.size() != q.N) fail("BadShape", "zeta length mismatch");
    const auto c = detail::coordinatize(q, r);
    if (c.nbasis > 24) fail("NotCoordinateRep", "coordinate rep too large to enumerate");

    const std::uint32_t full = (c.nbasis == 0) ? 0u : ((c.nbasis == 32) ? ~0u : ((1u << c.nbasis) - 1));
    std::uint32_t frame_mask = 0;
    for (int b : c.framing_support) frame_mask |= (1u << b);

    Rat zeta_total = 0;
    for (int b = 0; b < c.nbasis; ++b) zeta_total += zeta[c.vertex_of[b]];

    for (std::uint32_t S = 0; S <= full && c.nbasis > 0; ++S) {
        bool closed = true;
        Rat val = 0;
        for (int b = 0; b < c.nbasis && closed; ++b) {
            if (!(S & (1u << b))) continue;
            val += zeta[c.vertex_of[b]];
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                const int tgt = c.arrow_target[b][a];
                if (tgt >= 0 && !(S & (1u << tgt))) {
                    closed = false;
                    break;
                }
            }
        }
        if (!closed) continue;
        if (!r.framed) {
            if (S != 0 && S != full && val >= 0) return false;
        } else {
            if (S != 0 && val >= 0) return false;
            if (S != full && (S & frame_mask) == frame_mask && val >= zeta_total) return false;
        }
        if (S == full) break;
    }
    return true;
}

struct ExtDims {
    long long hom = 0, ext1 = 0, ext2 = 0, ext3 = 0;
};

namespace detail {

// Blocks Hom(E_a, F_b) vectorized as (row of F_b) * dimE + (col of E_a).
struct BlockLayout {
    std::vector<int> offset, rows, cols;
    int total = 0;
    void add(int r, int c) {
        offset.push_back(total);
        rows.push_back(r);
        cols.push_back(c);
        total += r * c;
    }
};

}  // namespace detail

/**
 * Hom and Ext dimensions from the Hom-complex of the (framed) Koszul
 * resolution:
 *   0 -> (+)_{k in Q^0} Hom(E_k,F_k) -> (+)_{b in Q^1} Hom(E_out(b),F_in(b))
 *     -> (+)_{a in Q_1} Hom(E_in(a),F_out(a)) -> (+)_{k in Q_0} Hom(E_k,F_k) -> 0
 * with the middle map assembled from the superpotential decompositions
 * c = a o r o b o s. For framed pairs Q^ includes the framing vertex/arrow.
 */
inline ExtDims hom_ext(const Quiver& q, const Rep& E, const Rep& F) {
    if (E.framed != F.framed || E.dim.size() != F.dim.size() ||
        E.mat.size() != F.mat.size())
        fail("QuiverMismatch", "modules live over different (framed) quivers");
    if (!check_relations(q, E) || !check_relations(q, F))
        fail("RelationViolated", "module does not satisfy the quiver relations");

    const int nA = (int)q.arrows.size();
    detail::BlockLayout t0, t1, t2, t3;
    for (int k = 0; k < q.N; ++k) t0.add(F.dim[k], E.dim[k]);
    if (E.framed) t0.add(F.dim_inf, E.dim_inf);
    for (int a = 0; a < nA; ++a) t1.add(F.dim[q.arrows[a].to], E.dim[q.arrows[a].from]);
    if (E.framed) t1.add(F.dim[0], E.dim_inf);  // framing arrow inf -> 0
    for (int a = 0; a < nA; ++a) t2.add(F.dim[q.arrows[a].from], E.dim[q.arrows[a].to]);
    for (int k = 0; k < q.N; ++k) t3.add(F.dim[k], E.dim[k]);

    Mat d0(t1.total, t0.total), d1(t2.total, t1.total), d2(t3.total, t2.total);

    auto put = [&](Mat& M, const detail::BlockLayout& to_l, int to_b,
                   const detail::BlockLayout& from_l, int from_b, const Mat& left,
                   const Mat& right, int sign) {
        // block map X -> left * X * right, X of shape (from rows x from cols)
        const int fr = from_l.rows[from_b], fc = from_l.cols[from_b];
        const int tr = to_l.rows[to_b], tc = to_l.cols[to_b];
        if (left.cols != fr || left.rows != tr || right.rows != fc || right.cols != tc)
            fail("BadShape", "internal: block shape mismatch in hom_ext");
        for (int i = 0; i < tr; ++i)
            for (int j = 0; j < tc; ++j)
                for (int p = 0; p < fr; ++p)
                    for (int s = 0; s < fc; ++s) {
                        const Rat v = left.at(i, p) * right.at(s, j);
                        if (v == 0) continue;
                        M.at(to_l.offset[to_b] + i * tc + j,
                             from_l.offset[from_b] + p * fc + s) += sign > 0 ? v : -v;
                    }
    };

    // d0: phi |-> F_b phi_out(b) - phi_in(b) E_b, and the framing analogue.
    for (int b = 0; b < nA; ++b) {
        const int from = q.arrows[b].from, to = q.arrows[b].to;
        put(d0, t1, b, t0, from, F.mat[b], Mat::identity(E.dim[from]), +1);
        put(d0, t1, b, t0, to, Mat::identity(F.dim[to]), E.mat[b], -1);
    }
    if (E.framed) {
        put(d0, t1, nA, t0, q.N, F.framing, Mat::identity(E.dim_inf), +1);
        put(d0, t1, nA, t0, 0, Mat::identity(F.dim[0]), E.framing, -1);
    }

    // d1 from the potential: for each cycle c and occurrence pair (a; b),
    // psi_b |-> sign(c) * F(s) psi_b E(r) with c = a o r o b o s.
    for (const auto& term : q.potential) {
        const int m = (int)term.cycle.size();
        for (int pa = 0; pa < m; ++pa) {
            const int a = term.cycle[pa];
            for (int pb = 0; pb < m; ++pb) {
                if (pb == pa) continue;
                const int b = term.cycle[pb];
                std::vector<int> rpath, spath;
                for (int p = (pa + 1) % m; p != pb; p = (p + 1) % m) rpath.push_back(term.cycle[p]);
                for (int p = (pb + 1) % m; p != pa; p = (p + 1) % m) spath.push_back(term.cycle[p]);
                const Mat Er = eval_path(q, E, rpath, q.arrows[a].to);
                const Mat Fs = eval_path(q, F, spath, q.arrows[b].to);
                put(d1, t2, a, t1, b, Fs, Er, term.sign);
            }
        }
    }

    // d2: chi |-> sum_{a: to(a)=k} F_a chi_a - sum_{a: from(a)=k} chi_a E_a.
    for (int a = 0; a < nA; ++a) {
        const int from = q.arrows[a].from, to = q.arrows[a].to;
        put(d2, t3, to, t2, a, F.mat[a], Mat::identity(E.dim[to]), +1);
        put(d2, t3, from, t2, a, Mat::identity(F.dim[from]), E.mat[a], -1);
    }

    if (!(d1 * d0).is_zero() || !(d2 * d1).is_zero())
        fail("RelationViolated", "internal: Hom-complex differentials do not compose to zero");

    const int r0 = rank(d0), r1 = rank(d1), r2 = rank(d2);
    ExtDims e;
    e.hom = t0.total - r0;
    e.ext1 = t1.total - r1 - r0;
    e.ext2 = t2.total - r2 - r1;
    e.ext3 = t3.total - r2;
    return e;
}

/**
 * The unique zeta-stable T-invariant module of dimension a positive real root
 * alpha, with zeta on the wall of alpha only; exhaustive search over string
 * windows and orientations.
 */
inline StringModule find_stable_string(const Quiver& q, const Zeta& zeta, const DimVec& alpha) {
    if (!is_real_root(alpha)) fail("NotRealRoot", "alpha must be a positive real root");
    long long ht = 0;
    for (auto v : alpha) {
        if (v < 0) fail("NotRealRoot", "alpha must be positive");
        ht += v;
    }
    if (dot(zeta, alpha) != 0) fail("NotOnWall", "zeta is not on the wall of alpha");
    for (const auto& beta : positive_real_roots(q.N, ht))
        if (beta.v != alpha && dot(zeta, beta.v) == 0)
            fail("NotOnWall", "zeta lies on a second wall of height <= |alpha|");

    std::vector<StringModule> found;
    for (int n0 = 0; n0 < q.N; ++n0) {
        std::vector<int> dims(q.N, 0);
        for (long long p = n0; p < n0 + ht; ++p) dims[p % q.N]++;
        bool match = true;
        for (int k = 0; k < q.N; ++k) match = match && dims[k] == (int)alpha[k];
        if (!match) continue;
        const long long L = ht - 1;  // orientation word length
        if (L > 20) fail("BadShape", "root height too large for exhaustive string search");
        for (long long bits = 0; bits < (1LL << L); ++bits) {
            std::vector<int> orient(L);
            for (long long i = 0; i < L; ++i) orient[i] = (bits >> i) & 1 ? +1 : -1;
            StringModule s = string_module(q, n0, n0 + ht - 1, orient);
            if (is_stable_tinv(q, s.rep, zeta)) found.push_back(std::move(s));
        }
    }
    if (found.empty()) fail("NoneFound", "no stable T-invariant string of dimension alpha");
    if (found.size() > 1) fail("NotUnique", "multiple stable strings of dimension alpha");
    return found.front();
}

/**
 * C_m: m-1 successive self-extensions of an even-parity string, glued by a
 * single-arrow Ext^1 cocycle shifting copy M into copy M+1.
 */
inline Rep extend_cm(const Quiver& q, const StringModule& s, int m) {
    long long odd = 0;
    for (int k = 0; k < q.N; ++k)
        if (!q.in_ir(k)) odd += s.rep.dim[k];
    if (odd % 2 != 0)
        fail("OddParity", "self-extension is undefined when ext1(C,C) = 0");
    if (m < 1) fail("BadShape", "m must be >= 1");

    // Candidate single-arrow glues, bottom of the window first: the r-loop at
    // an Ir position n, or the duplicated orientation arrow at j = n+1/2.
    struct Glue {
        int arrow;
        long long from_pos, to_pos;  // window positions linked by the extra action
    };
    std::vector<Glue> candidates;
    auto vtx = [&](long long n) { return (int)(((n % q.N) + q.N) % q.N); };
    for (long long n = s.n0; n <= s.n1; ++n) {
        if (q.in_ir(vtx(n))) candidates.push_back({q.loop_at[vtx(n)], n, n});
        if (n < s.n1) {
            const int t = vtx(n);
            if (s.orient[n - s.n0] > 0)
                candidates.push_back({q.hplus[t], n, n + 1});
            else
                candidates.push_back({q.hminus[t], n + 1, n});
        }
    }

    std::vector<int> local(s.n1 - s.n0 + 1);
    {
        std::vector<int> cnt(q.N, 0);
        for (long long n = s.n0; n <= s.n1; ++n) local[n - s.n0] = cnt[vtx(n)]++;
    }
    auto build = [&](const Glue& g, int copies) {
        std::vector<int> dims(q.N);
        for (int k = 0; k < q.N; ++k) dims[k] = copies * s.rep.dim[k];
        Rep r = rep_zero(q, dims);
        // copy M occupies rows/cols [M*d, (M+1)*d) in each vertex block
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            const Mat& base = s.rep.mat[a];
            for (int M = 0; M < copies; ++M)
                for (int i = 0; i < base.rows; ++i)
                    for (int j = 0; j < base.cols; ++j)
                        if (base.at(i, j) != 0)
                            r.mat[a].at(M * base.rows + i, M * base.cols + j) = base.at(i, j);
        }
        const int dt = s.rep.dim[q.arrows[g.arrow].to], df = s.rep.dim[q.arrows[g.arrow].from];
        for (int M = 0; M + 1 < copies; ++M)
            r.mat[g.arrow].at((M + 1) * dt + local[g.to_pos - s.n0],
                              M * df + local[g.from_pos - s.n0]) += 1;
        return r;
    };

    for (const auto& g : candidates) {
        Rep c2 = build(g, 2);
        if (!check_relations(q, c2)) continue;
        if (hom_ext(q, s.rep, c2).hom != 1) continue;  // rules out the split extension
        return build(g, m);
    }
    fail("OddParity", "internal: no closed nontrivial single-arrow glue found");
}

}  // namespace wallx
