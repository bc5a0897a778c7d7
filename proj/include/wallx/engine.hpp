#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wallx/base.hpp"
#include "wallx/crystal.hpp"
#include "wallx/rootlat.hpp"
#include "wallx/series.hpp"
#include "wallx/toric.hpp"

namespace wallx {

// beta-orientation reconciling the wall-crossing product with the MacMahon
// closed form (pinned by the acceptance suite, AC-5).
inline constexpr BetaOrientation kPinnedBetaOrientation = BetaOrientation::BetaMinus;

enum class ZMode { RelativeToCyclic, RelativeToTrivial, AbsoluteWithOracle, AbsoluteWithDtpt };

inline const char* zmode_name(ZMode m) {
    switch (m) {
        case ZMode::RelativeToCyclic: return "relative_to_cyclic";
        case ZMode::RelativeToTrivial: return "relative_to_trivial";
        case ZMode::AbsoluteWithOracle: return "absolute_with_oracle";
        case ZMode::AbsoluteWithDtpt: return "absolute_with_dtpt";
    }
    return "?";
}

// (1 - eps(alpha) q^alpha)^(-eps(alpha) alpha_0); the Euler-characteristic
// factor picked up when crossing the wall of alpha towards the cyclic side.
inline Series wall_factor_eu(const Geometry& g, const DimVec& alpha, int D) {
    const int eps = epsilon_sign(g, alpha);
    const long long e = -(long long)eps * alpha[0];
    if (e == 0) return Series::one(g.N, D);
    std::vector<int> a(alpha.begin(), alpha.end());
    return binomial_factor(-eps, a, e, D);
}

namespace detail {

inline Series root_product(const Geometry& g, int D, bool invert_factors,
                           const std::vector<Root>& roots, const Zeta* zeta, bool want_positive) {
    Series z = Series::one(g.N, D);
    for (const auto& r : roots) {
        if (zeta) {
            const Rat d = dot(*zeta, r.v);
            if (want_positive ? !(d > 0) : !(d < 0)) continue;
        }
        const int eps = epsilon_sign(g, r.v);
        const long long e = (invert_factors ? 1 : -1) * (long long)eps * r.v[0];
        if (e == 0) continue;
        std::vector<int> a(r.v.begin(), r.v.end());
        z = z * binomial_factor(-eps, a, e, D);
    }
    return z;
}

// M(q)^N . (PT-side product) . (crossing factors from the PT chamber down to
// the cyclic chamber); the Euler-characteristic DT/PT identity supplies the
// M(q)^N step across the imaginary wall.
inline Series ncdt_closed_form(const Geometry& g, int D) {
    const std::vector<int> zero(g.N, 0), delta(g.N, 1);
    Series z = macmahon(zero, delta, +1, +1, g.N, D);
    const auto roots = positive_real_roots(g.N, D);
    std::vector<Root> pt_side, crossing;
    for (const auto& r : roots)
        (r.family == Root::MinusFamily ? pt_side : crossing).push_back(r);
    z = z * root_product(g, D, false, pt_side, nullptr, false);
    z = z * root_product(g, D, false, crossing, nullptr, false);
    return z;
}

}  // namespace detail

/**
 * Euler-characteristic partition function at a generic zeta, assembled from
 * the wall-crossing factors. Relative modes return Z/Z_boundary; the absolute
 * modes anchor the cyclic end with the crystal oracle or the closed form.
 */
inline Series z_eu(const Geometry& g, const Zeta& zeta, int D, ZMode mode,
                   const std::optional<std::string>& cache_dir = std::nullopt) {
    if ((int)zeta.size() != g.N) fail("BadShape", "zeta has wrong length");
    require_generic(g.N, zeta, D);
    const Rat S = zeta_sum(zeta);
    const auto roots = positive_real_roots(g.N, D);

    if (mode == ZMode::RelativeToTrivial) {
        if (!(S > 0)) fail("BadMode", "relative_to_trivial requires sum(zeta) > 0");
        // walls between zeta and the trivial chamber: zeta.alpha < 0
        return detail::root_product(g, D, false, roots, &zeta, false);
    }
    if (!(S < 0)) fail("BadMode", zmode_name(mode) + std::string(" requires sum(zeta) < 0"));
    // ratio Z_zeta / Z_cyclic: inverse factors over the crossed walls zeta.alpha > 0
    Series ratio = detail::root_product(g, D, true, roots, &zeta, true);
    switch (mode) {
        case ZMode::RelativeToCyclic:
            return ratio;
        case ZMode::AbsoluteWithOracle:
            return ratio * enumerate_molten_cached(g, D, cache_dir);
        case ZMode::AbsoluteWithDtpt:
            return ratio * detail::ncdt_closed_form(g, D);
        default:
            fail("BadMode", "unreachable");
    }
}

inline Series z_signed(const Geometry& g, const Zeta& zeta, int D, ZMode mode,
                       const std::optional<std::string>& cache_dir = std::nullopt) {
    return sign_substitute(z_eu(g, zeta, D, mode, cache_dir), g);
}

// A generic parameter in the PT chamber (just above the imaginary wall).
inline Zeta pt_zeta(const Geometry& g) {
    Zeta z(g.N, Rat(1));
    z[0] = Rat(-g.N + 1) + Rat(1, 9973);
    return z;
}

/**
 * Z_PT as a graded table over (n, beta): the finite product of MacMahon
 * factors M(q_[a,b], -q)^{eps(alpha_[a,b])}, expanded exactly for every key
 * whose module-variable preimage has total degree <= D.
 */
inline GradedTable z_pt_macmahon(const Geometry& g, int D) {
    // grading (n, beta_1..beta_{N-1}) with module weight N*n - sum(beta)
    std::vector<int> weights(g.N, -1);
    weights[0] = g.N;
    Series proto(g.N, D, weights);
    Series z = Series::one_like(proto);
    std::vector<int> q_exp(g.N, 0);
    q_exp[0] = 1;
    for (int a = 1; a <= g.N - 1; ++a) {
        for (int b = a; b <= g.N - 1; ++b) {
            DimVec alpha(g.N, 0);
            for (int k = a; k <= b; ++k) alpha[k] = 1;
            const int eps = epsilon_sign(g, alpha);
            std::vector<int> x_exp(g.N, 0);
            for (int k = a; k <= b; ++k) x_exp[k] = 1;
            z = z * macmahon_like(proto, x_exp, q_exp, +1, -1, eps);
        }
    }
    GradedTable t;
    for (const auto& [e, c] : z.terms()) {
        GradedKey key{e[0], std::vector<int>(e.begin() + 1, e.end())};
        t.emplace(std::move(key), c);
    }
    return t;
}

// Genus-0 BPS counts extracted from the PT product: n_{0,[a,b]} = -eps.
struct GvEntry {
    int a, b;
    long long n0;
    friend bool operator==(const GvEntry&, const GvEntry&) = default;
};

inline std::vector<GvEntry> gv_invariants(const Geometry& g) {
    std::vector<GvEntry> out;
    for (int a = 1; a <= g.N - 1; ++a)
        for (int b = a; b <= g.N - 1; ++b) {
            DimVec alpha(g.N, 0);
            for (int k = a; k <= b; ++k) alpha[k] = 1;
            out.push_back({a, b, -(long long)epsilon_sign(g, alpha)});
        }
    return out;
}

struct Provenance {
    std::string geometry_hash;
    std::string mode;
    std::string flavor;
    std::string beta_orientation = beta_orientation_name(kPinnedBetaOrientation);
    bool dtpt_identity_used = false;
};

inline Provenance make_provenance(const Geometry& g, const std::string& mode,
                                  const std::string& flavor) {
    Provenance p;
    p.geometry_hash = g.hash();
    p.mode = mode;
    p.flavor = flavor;
    p.dtpt_identity_used = mode == "absolute_with_dtpt";
    return p;
}

}  // namespace wallx
