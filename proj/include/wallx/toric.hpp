#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "wallx/base.hpp"

namespace wallx {

// One triangle base: sigma(i) = (x2/2, y) for a half-integer index i; x2 = 2*sigma_x.
struct SigmaEntry {
    int x2 = 0;
    int y = 0;
};

/**
 * Triangulated trapezoid with vertices (0,0), (N0,0), (0,1), (N1,1).
 * sigma[t] describes the triangle T_{t+1/2}; triangles sweep the trapezoid
 * from its right boundary edge to the left one, consecutive triangles
 * sharing the interior edges l_1..l_{N-1}.
 */
struct Geometry {
    int N0 = 0;
    int N1 = 0;
    int N = 0;
    std::vector<SigmaEntry> sigma;  // index t = 0..N-1 for i = t + 1/2

    std::vector<int> tau;  // tau[k] = +1 iff k in Ir
    std::vector<int> Ir;   // sorted

    struct Tri {
        int base_y;     // row of the unit base
        int base_x_lo;  // base = [base_x_lo, base_x_lo+1] at height base_y
        int apex_x;     // apex = (apex_x, 1-base_y)
    };
    std::vector<Tri> tri;

    struct Edge {
        int x0;  // endpoint (x0, 0)
        int x1;  // endpoint (x1, 1)
    };
    std::vector<Edge> edge;  // edge[k] = l_k, k = 0..N; l_0/l_N are the boundary edges

    int row(int t) const { return sigma[((t % N) + N) % N].y; }  // sigma_y(t + 1/2)
    bool in_Ir(int k) const { return tau[((k % N) + N) % N] > 0; }

    std::string key() const {
        std::string s = "g:" + std::to_string(N0) + "," + std::to_string(N1);
        for (const auto& e : sigma) s += ":" + std::to_string(e.x2) + "/" + std::to_string(e.y);
        return s;
    }
    std::string hash() const { return hex64(fnv1a64(key())); }
};

inline Geometry parse_geometry(int N0, int N1, const std::vector<SigmaEntry>& sigma_list) {
    if (N0 < 1 || N1 < 0 || N1 > N0)
        fail("BadShape", "need N0 >= 1 and 0 <= N1 <= N0, got N0=" + std::to_string(N0) +
                             " N1=" + std::to_string(N1));
    const int N = N0 + N1;
    if ((int)sigma_list.size() != N)
        fail("BadShape", "sigma must have N=" + std::to_string(N) + " entries, got " +
                             std::to_string(sigma_list.size()));

    Geometry g;
    g.N0 = N0;
    g.N1 = N1;
    g.N = N;
    g.sigma = sigma_list;

    std::set<std::pair<int, int>> seen;
    for (const auto& e : sigma_list) {
        if (e.y != 0 && e.y != 1)
            fail("NotABijection", "sigma_y must be 0 or 1");
        const int cap = (e.y == 0 ? N0 : N1);
        if (e.x2 < 1 || e.x2 > 2 * cap - 1 || e.x2 % 2 == 0)
            fail("NotABijection", "sigma_x=" + std::to_string(e.x2) + "/2 out of row-" +
                                      std::to_string(e.y) + " range");
        if (!seen.insert({e.x2, e.y}).second)
            fail("NotABijection", "duplicate sigma value (" + std::to_string(e.x2) + "/2," +
                                      std::to_string(e.y) + ")");
    }
    // seen covers exactly N0 + N1 distinct in-range values, so the map is onto.
    for (int t = 0; t + 1 < N; ++t)
        for (int u = t + 1; u < N; ++u)
            if (sigma_list[t].y == sigma_list[u].y && sigma_list[t].x2 <= sigma_list[u].x2)
                fail("MonotonicityViolated",
                     "sigma_x must strictly decrease within a row (positions " +
                         std::to_string(t) + "," + std::to_string(u) + ")");

    g.tau.assign(N, -1);
    for (int k = 0; k < N; ++k) {
        const int prev = g.sigma[(k - 1 + N) % N].y;
        const int next = g.sigma[k].y;
        g.tau[k] = (prev == next) ? +1 : -1;
        if (g.tau[k] > 0) g.Ir.push_back(k);
    }

    // Sweep the triangulation right-to-left; validity follows from the two
    // sigma axioms, so any mismatch here is an internal error.
    int e0 = N0, e1 = N1;
    g.edge.push_back({e0, e1});
    for (int t = 0; t < N; ++t) {
        const auto& s = g.sigma[t];
        const int hi = (s.x2 + 1) / 2;
        Geometry::Tri T;
        T.base_y = s.y;
        T.base_x_lo = hi - 1;
        if (s.y == 0) {
            if (e0 != hi) fail("BadShape", "internal: triangulation sweep mismatch");
            T.apex_x = e1;
            e0 = hi - 1;
        } else {
            if (e1 != hi) fail("BadShape", "internal: triangulation sweep mismatch");
            T.apex_x = e0;
            e1 = hi - 1;
        }
        g.tri.push_back(T);
        g.edge.push_back({e0, e1});
    }
    return g;
}

// sigma from a row pattern: within each row the bases are assigned right to left.
inline Geometry geometry_from_rows(int N0, int N1, const std::vector<int>& yseq) {
    int next0 = 2 * N0 - 1, next1 = 2 * N1 - 1;
    std::vector<SigmaEntry> sig;
    for (int y : yseq) {
        if (y == 0) {
            sig.push_back({next0, 0});
            next0 -= 2;
        } else {
            sig.push_back({next1, 1});
            next1 -= 2;
        }
    }
    return parse_geometry(N0, N1, sig);
}

inline Geometry geometry_conifold() { return geometry_from_rows(1, 1, {0, 1}); }
inline Geometry geometry_c3() { return geometry_from_rows(1, 0, {0}); }
inline Geometry geometry_example12() {
    return parse_geometry(4, 2, {{7, 0}, {3, 1}, {5, 0}, {3, 0}, {1, 1}, {1, 0}});
}

struct Divisor {
    std::vector<long long> row0;  // coefficients of D_{0,x}, x = 0..N0
    std::vector<long long> row1;  // coefficients of D_{1,x}, x = 0..N1

    long long at(int eps, int x) const { return eps == 0 ? row0.at(x) : row1.at(x); }
    long long& at(int eps, int x) { return eps == 0 ? row0.at(x) : row1.at(x); }

    Divisor& operator+=(const Divisor& o) {
        for (size_t i = 0; i < row0.size(); ++i) row0[i] += o.row0[i];
        for (size_t i = 0; i < row1.size(); ++i) row1[i] += o.row1[i];
        return *this;
    }
    Divisor& operator-=(const Divisor& o) {
        for (size_t i = 0; i < row0.size(); ++i) row0[i] -= o.row0[i];
        for (size_t i = 0; i < row1.size(); ++i) row1[i] -= o.row1[i];
        return *this;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.row0 == b.row0 && a.row1 == b.row1;
    }
};

inline Divisor zero_divisor(const Geometry& g) {
    Divisor d;
    d.row0.assign(g.N0 + 1, 0);
    d.row1.assign(g.N1 + 1, 0);
    return d;
}

enum class DivisorKind { EPlus, EMinus, FPlus, FMinus, FPlusTotal, GPlus, GMinus, H, I };

namespace detail {

inline Divisor e_divisor(const Geometry& g, int t, bool plus) {
    Divisor d = zero_divisor(g);
    const auto& s = g.sigma[t];
    const int cap = (s.y == 0 ? g.N0 : g.N1);
    if (plus) {
        for (int j = (s.x2 + 1) / 2; j <= cap; ++j) d.at(s.y, j) += 1;
    } else {
        for (int j = 0; j <= (s.x2 - 1) / 2; ++j) d.at(s.y, j) += 1;
    }
    return d;
}

inline Divisor f_divisor(const Geometry& g, int k, bool plus) {
    Divisor d = zero_divisor(g);
    if (plus) {
        for (int t = 0; t <= k - 1; ++t) d += e_divisor(g, t, true);
    } else {
        for (int t = k; t <= g.N - 1; ++t) d += e_divisor(g, t, false);
    }
    return d;
}

// index2 = doubled index: odd for half-integer kinds, even (2k) for integer kinds.
inline int half_index(const Geometry& g, int index2, const char* kind) {
    if (index2 % 2 == 0 || index2 < 1 || index2 > 2 * g.N - 1)
        fail("IndexOutOfRange", std::string(kind) + " expects a half-integer index in [1/2, N-1/2]");
    return (index2 - 1) / 2;
}

}  // namespace detail

// For half-integer-indexed kinds (E+-, G+-, H) pass index2 = 2i (odd);
// for integer-indexed kinds (F+-, I) pass the plain integer k.
inline Divisor divisor(const Geometry& g, DivisorKind kind, int index = 0) {
    using detail::e_divisor;
    using detail::f_divisor;
    switch (kind) {
        case DivisorKind::EPlus:
            return e_divisor(g, detail::half_index(g, index, "E+"), true);
        case DivisorKind::EMinus:
            return e_divisor(g, detail::half_index(g, index, "E-"), false);
        case DivisorKind::FPlus:
            if (index < 1 || index > g.N) fail("IndexOutOfRange", "F+ expects 1 <= k <= N");
            return f_divisor(g, index, true);
        case DivisorKind::FMinus:
            if (index < 1 || index > g.N) fail("IndexOutOfRange", "F- expects 1 <= k <= N");
            return f_divisor(g, index, false);
        case DivisorKind::FPlusTotal: {
            Divisor d = zero_divisor(g);
            for (int k = 1; k <= g.N - 1; ++k) d += f_divisor(g, k, true);
            return d;
        }
        case DivisorKind::GPlus: {
            const int t = detail::half_index(g, index, "G+");
            Divisor d = zero_divisor(g);
            for (int k = 1; k <= t; ++k) d += f_divisor(g, k, true);
            return d;
        }
        case DivisorKind::GMinus: {
            const int t = detail::half_index(g, index, "G-");
            Divisor d = zero_divisor(g);
            for (int k = t + 1; k <= g.N - 1; ++k) d += f_divisor(g, k, false);
            return d;
        }
        case DivisorKind::H: {
            const int t = detail::half_index(g, index, "H");
            Divisor d = zero_divisor(g);
            for (int k = 1; k <= t; ++k) d += f_divisor(g, k, true) - f_divisor(g, k, false);
            return d;
        }
        case DivisorKind::I: {
            if (index < 1 || index > g.N - 1) fail("IndexOutOfRange", "I expects k in I");
            Divisor d = divisor(g, DivisorKind::H, 2 * index - 1);
            return d + f_divisor(g, index, true);
        }
    }
    fail("IndexOutOfRange", "unknown divisor kind");
}

/**
 * Piecewise linear support function of a divisor: value -D(eps,x) at the
 * lattice point (x,eps,1), one integral linear form a*x + b*y + c*z per
 * triangle cone.
 */
struct SupportFn {
    std::vector<std::array<long long, 3>> form;  // per triangle (a, b, c)
    std::vector<long long> v0, v1;               // lattice values -D(eps,x)

    long long value_at(int x, int y) const { return y == 0 ? v0.at(x) : v1.at(x); }
    static long long eval(const std::array<long long, 3>& f, int x, int y) {
        return f[0] * x + f[1] * y + f[2];
    }
};

inline SupportFn support_function(const Geometry& g, const Divisor& d) {
    if ((int)d.row0.size() != g.N0 + 1 || (int)d.row1.size() != g.N1 + 1)
        fail("BadShape", "divisor shape does not match geometry");
    SupportFn s;
    s.v0.resize(g.N0 + 1);
    s.v1.resize(g.N1 + 1);
    for (int x = 0; x <= g.N0; ++x) s.v0[x] = -d.at(0, x);
    for (int x = 0; x <= g.N1; ++x) s.v1[x] = -d.at(1, x);
    for (const auto& T : g.tri) {
        const long long vl = s.value_at(T.base_x_lo, T.base_y);
        const long long vr = s.value_at(T.base_x_lo + 1, T.base_y);
        const long long va = s.value_at(T.apex_x, 1 - T.base_y);
        const long long a = vr - vl;
        const long long b =
            (va - vl - a * (T.apex_x - T.base_x_lo)) * (T.base_y == 0 ? 1 : -1);
        const long long c = vl - a * T.base_x_lo - b * T.base_y;
        s.form.push_back({a, b, c});
    }
    return s;
}

inline bool is_globally_linear(const Geometry& g, const SupportFn& s) {
    for (int t = 1; t < g.N; ++t)
        if (s.form[t] != s.form[0]) return false;
    return true;
}

// Upper convexity across each interior edge l_k: the linear extension of one
// side dominates the value at the opposite vertex of the other side.
inline bool is_upper_convex(const Geometry& g, const SupportFn& s) {
    auto opposite = [&](const Geometry::Tri& T, const Geometry::Edge& l) -> std::pair<int, int> {
        const std::array<std::pair<int, int>, 3> vs = {
            std::pair<int, int>{T.base_x_lo, T.base_y},
            {T.base_x_lo + 1, T.base_y},
            {T.apex_x, 1 - T.base_y}};
        for (auto v : vs) {
            const bool on_l = (v.second == 0 && v.first == l.x0) ||
                              (v.second == 1 && v.first == l.x1);
            if (!on_l) return v;
        }
        fail("BadShape", "internal: degenerate triangle");
    };
    for (int k = 1; k <= g.N - 1; ++k) {
        const auto& l = g.edge[k];
        const auto p = opposite(g.tri[k], l);      // vertex of T_{k+1/2} off l_k
        const auto q = opposite(g.tri[k - 1], l);  // vertex of T_{k-1/2} off l_k
        if (SupportFn::eval(s.form[k - 1], p.first, p.second) < s.value_at(p.first, p.second))
            return false;
        if (SupportFn::eval(s.form[k], q.first, q.second) < s.value_at(q.first, q.second))
            return false;
    }
    return true;
}

inline std::string curve_type(const Geometry& g, int k) {
    if (k < 1 || k > g.N - 1) fail("IndexOutOfRange", "curve index k must be in I = {1..N-1}");
    return g.in_Ir(k) ? "(0,-2)" : "(-1,-1)";
}

}  // namespace wallx
