#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "wallx/base.hpp"
#include "wallx/toric.hpp"

namespace wallx {

using DimVec = std::vector<long long>;
using Zeta = std::vector<Rat>;

// Positive real root alpha_[a,b] + n*delta (PlusFamily) or n*delta - alpha_[a,b].
struct Root {
    DimVec v;
    int a = 0, b = 0;
    long long n = 0;
    enum Family { PlusFamily, MinusFamily } family = PlusFamily;

    long long height() const {
        long long h = 0;
        for (auto x : v) h += x;
        return h;
    }
};

inline DimVec root_vector(int N, int a, int b, long long n, Root::Family fam) {
    DimVec v(N, n);
    for (int k = a; k <= b; ++k) v[k] += (fam == Root::PlusFamily ? 1 : -1);
    return v;
}

inline std::vector<Root> positive_real_roots(int N, long long max_height) {
    std::vector<Root> out;
    if (N < 2) return out;  // rank-0 affine case has no real roots
    for (int a = 1; a <= N - 1; ++a) {
        for (int b = a; b <= N - 1; ++b) {
            const long long len = b - a + 1;
            for (long long n = 0; n * N + len <= max_height; ++n)
                out.push_back({root_vector(N, a, b, n, Root::PlusFamily), a, b, n,
                               Root::PlusFamily});
            for (long long n = 1; n * N - len <= max_height; ++n)
                out.push_back({root_vector(N, a, b, n, Root::MinusFamily), a, b, n,
                               Root::MinusFamily});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.v < y.v; });
    return out;
}

// Affine Cartan pairing (C v)_k = 2 v_k - v_{k-1} - v_{k+1}, neighbors counted
// with multiplicity (N=2 doubles the off-diagonal, N=1 degenerates to 0).
inline long long cartan_apply(const DimVec& v, int k) {
    const int N = (int)v.size();
    if (N == 1) return 0;
    return 2 * v[k] - v[(k + 1) % N] - v[(k + N - 1) % N];
}

inline long long cartan_norm(const DimVec& v) {
    long long s = 0;
    for (int k = 0; k < (int)v.size(); ++k) s += v[k] * cartan_apply(v, k);
    return s;
}

inline bool is_real_root(const DimVec& v) { return cartan_norm(v) == 2; }

inline int epsilon_sign(const Geometry& g, const DimVec& alpha) {
    if ((int)alpha.size() != g.N) fail("NotRealRoot", "dimension vector has wrong length");
    if (!is_real_root(alpha)) fail("NotRealRoot", "epsilon is defined on real roots only");
    long long s = 0;
    for (int k = 0; k < g.N; ++k)
        if (!g.in_Ir(k)) s += alpha[k];
    return (s % 2 == 0) ? +1 : -1;
}

inline DimVec mutate_dimvec(int k, const DimVec& v) {
    const int N = (int)v.size();
    k = ((k % N) + N) % N;
    if (N == 1) return v;
    DimVec r = v;
    r[k] = v[(k + N - 1) % N] + v[(k + 1) % N] - v[k];
    return r;
}

inline Zeta mutate_param(int k, const Zeta& z) {
    const int N = (int)z.size();
    k = ((k % N) + N) % N;
    if (N == 1) return z;
    Zeta r = z;
    r[(k + N - 1) % N] += z[k];
    r[(k + 1) % N] += z[k];
    r[k] = -z[k];
    return r;
}

inline std::vector<int> mutate_tau(int k, const std::vector<int>& tau) {
    const int N = (int)tau.size();
    k = ((k % N) + N) % N;
    if (N == 1) return tau;
    std::vector<int> r = tau;
    r[(k + N - 1) % N] *= tau[k];
    if ((k + 1) % N != (k + N - 1) % N) r[(k + 1) % N] *= tau[k];
    return r;
}

inline Rat dot(const Zeta& z, const DimVec& v) {
    Rat s = 0;
    for (size_t i = 0; i < z.size(); ++i) s += z[i] * Rat(v[i]);
    return s;
}

inline Rat zeta_sum(const Zeta& z) {
    Rat s = 0;
    for (const auto& x : z) s += x;
    return s;
}

// Exact genericity within a truncation window: zeta off the imaginary wall
// and off every real-root wall of height <= max_height. Walls through the
// base point of higher height never affect a cap-D computation, which keeps
// parameters like (-5,4) on the conifold usable (they sit on the wall of
// alpha_1 + 4 delta but cross it at c = 0).
inline void require_generic(int N, const Zeta& z, long long max_height) {
    const Rat S = zeta_sum(z);
    if (S == 0) fail("OnImaginaryWall", "sum of zeta vanishes");
    for (const auto& r : positive_real_roots(N, max_height))
        if (dot(z, r.v) == 0)
            fail("OnWall", "zeta lies on the wall of a real root of height " +
                               std::to_string(r.height()));
}

struct Crossing {
    Root root;       // in original coordinates
    Rat c;           // |zeta . alpha| / height(alpha)
    int simple = 0;  // k_s with s_{k_{s-1}}...s_{k_1}(alpha_s) = alpha_{k_s}
};

struct ChamberPath {
    bool negative_side = true;  // true: sum(zeta) < 0 (cyclic side)
    std::vector<Crossing> crossings;  // c strictly decreasing
};

/**
 * Walls met by the ray zeta -+ c*(1,...,1), ordered from the far chamber
 * (cyclic for sum < 0, trivial for sum > 0) towards zeta, together with the
 * simple-reflection word recovering each crossed root.
 */
inline ChamberPath chamber_path(int N, const Zeta& z) {
    if ((int)z.size() != N) fail("BadShape", "zeta has wrong length");
    const Rat S = zeta_sum(z);
    if (S == 0) fail("OnImaginaryWall", "sum of zeta vanishes");
    ChamberPath path;
    path.negative_side = S < 0;

    // In each family zeta.(root) is monotone in n with slope +-S, so the
    // crossed roots form an initial segment of n values.
    std::vector<Crossing> xs;
    auto sweep = [&](int a, int b, Root::Family fam) {
        for (long long n = (fam == Root::PlusFamily ? 0 : 1);; ++n) {
            Root r{root_vector(N, a, b, n, fam), a, b, n, fam};
            const Rat d = dot(z, r.v);
            const bool crossed = path.negative_side ? d > 0 : d < 0;
            if (!crossed) break;
            Crossing c;
            c.root = std::move(r);
            c.c = (d < 0 ? -d : d) / Rat(c.root.height());
            xs.push_back(std::move(c));
        }
    };
    for (int a = 1; a <= N - 1; ++a) {
        for (int b = a; b <= N - 1; ++b) {
            sweep(a, b, Root::PlusFamily);
            sweep(a, b, Root::MinusFamily);
        }
    }
    std::sort(xs.begin(), xs.end(), [](const Crossing& x, const Crossing& y) {
        if (x.c != y.c) return x.c > y.c;
        return x.root.v < y.root.v;
    });
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i].c == xs[i + 1].c)
            fail("DegeneratePath", "two crossings share the parameter c = " +
                                       rat_to_string(xs[i].c));

    // Recover simple indices by reflecting each crossed root through the
    // previously crossed walls.
    std::vector<int> word;
    for (auto& x : xs) {
        DimVec beta = x.root.v;
        for (int w : word) beta = mutate_dimvec(w, beta);
        int k = -1, ones = 0;
        bool simple = true;
        for (int i = 0; i < N; ++i) {
            if (beta[i] == 1) {
                k = i;
                ++ones;
            } else if (beta[i] != 0) {
                simple = false;
            }
        }
        if (!simple || ones != 1)
            fail("DegeneratePath", "crossed root does not reflect to a simple root");
        x.simple = k;
        word.push_back(k);
    }
    path.crossings = std::move(xs);
    return path;
}

inline ChamberPath chamber_path(const Geometry& g, const Zeta& z) {
    return chamber_path(g.N, z);
}

}  // namespace wallx
