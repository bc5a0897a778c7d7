#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "wallx/base.hpp"
#include "wallx/toric.hpp"

namespace wallx {

/**
 * Truncated multivariate power series with cpp_int coefficients, sparse over
 * exponent vectors in Z^n_{>=0}. Truncation is by weighted total degree;
 * the default weight vector (1,...,1) gives plain total degree.
 */
class Series {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, Int>;  // lexicographic key order, deterministic

    Series(int nvars, int cap) : nvars_(nvars), cap_(cap), weights_(nvars, 1) {}
    Series(int nvars, int cap, std::vector<int> weights)
        : nvars_(nvars), cap_(cap), weights_(std::move(weights)) {}

    static Series one(int nvars, int cap) {
        Series s(nvars, cap);
        s.add_term(Exp(nvars, 0), 1);
        return s;
    }
    static Series one_like(const Series& proto) {
        Series s(proto.nvars_, proto.cap_, proto.weights_);
        s.add_term(Exp(proto.nvars_, 0), 1);
        return s;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::vector<int>& weights() const { return weights_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long weight_of(const Exp& e) const {
        long long w = 0;
        for (int i = 0; i < nvars_; ++i) w += (long long)weights_[i] * e[i];
        return w;
    }

    void add_term(const Exp& e, const Int& c) {
        if (c == 0 || weight_of(e) > cap_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void check_compatible(const Series& o) const {
        if (nvars_ != o.nvars_ || cap_ != o.cap_ || weights_ != o.weights_)
            fail("CapMismatch", "series have different variable count, cap, or grading");
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_compatible(b);
        Series r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        a.check_compatible(b);
        Series r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check_compatible(b);
        Series r(a.nvars_, a.cap_, a.weights_);
        Exp e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const Series& a, const Series& b) {
        return a.nvars_ == b.nvars_ && a.cap_ == b.cap_ && a.weights_ == b.weights_ &&
               a.terms_ == b.terms_;
    }

    // Requires constant term +-1; every other term must have positive weight.
    Series invert() const {
        Exp zero(nvars_, 0);
        const Int c0 = coeff(zero);
        if (c0 != 1 && c0 != -1)
            fail("NonUnitConstantTerm", "inversion requires constant term +-1");
        for (const auto& [e, c] : terms_)
            if (e != zero && weight_of(e) <= 0)
                fail("NonUnitConstantTerm", "inversion requires positive-weight tail");
        // a = c0(1 - u);  a^{-1} = c0(1 + u + u^2 + ...)
        Series u(nvars_, cap_, weights_);
        for (const auto& [e, c] : terms_)
            if (e != zero) u.add_term(e, (c0 == 1 ? -c : c));
        Series acc = one_like(*this);
        Series p = u;
        for (int j = 0; j < cap_ && !p.is_zero(); ++j) {
            acc = acc + p;
            p = p * u;
        }
        if (!p.is_zero()) acc = acc + p;
        if (c0 == -1) {
            Series r(nvars_, cap_, weights_);
            for (const auto& [e, c] : acc.terms_) r.add_term(e, -c);
            return r;
        }
        return acc;
    }

    Series pow(long long e) const {
        if (e < 0) return invert().pow(-e);
        Series r = one_like(*this);
        Series base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

private:
    int nvars_;
    int cap_;
    std::vector<int> weights_;
    Terms terms_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }
inline Series series_invert(const Series& a) { return a.invert(); }
inline Series series_pow(const Series& a, long long e) { return a.pow(e); }

// (1 + s q^alpha)^e truncated, expanded by generalized binomials.
inline Series binomial_factor_like(const Series& proto, int sign, const std::vector<int>& alpha,
                                   long long e) {
    bool all_zero = true, all_nonneg = true;
    for (int a : alpha) {
        if (a != 0) all_zero = false;
        if (a < 0) all_nonneg = false;
    }
    if (all_zero || !all_nonneg) fail("ZeroExponent", "binomial factor needs alpha >= 0, alpha != 0");
    Series r(proto.nvars(), proto.cap(), proto.weights());
    Series::Exp exp((size_t)proto.nvars(), 0);
    Int sj = 1;
    for (long long j = 0;; ++j) {
        if (r.weight_of(exp) > r.cap()) break;
        const Int c = binomial_general(e, j) * sj;
        r.add_term(exp, c);
        if (e >= 0 && j >= e) break;
        for (int i = 0; i < proto.nvars(); ++i) exp[i] += alpha[i];
        sj *= sign;
    }
    return r;
}

inline Series binomial_factor(int sign, const std::vector<int>& alpha, long long e, int cap) {
    Series proto((int)alpha.size(), cap);
    return binomial_factor_like(proto, sign, alpha, e);
}

// prod_{n>=1} (1 - (x_sign q^{x_exp})(q_sign q^{q_exp})^n)^{-n e} truncated.
inline Series macmahon_like(const Series& proto, const std::vector<int>& x_exp,
                            const std::vector<int>& q_exp, int x_sign, int q_sign, long long e) {
    bool qz = true;
    for (int a : q_exp) qz = qz && a == 0;
    if (qz) fail("ZeroQExponent", "MacMahon factor needs a nonzero q exponent");
    Series r = Series::one_like(proto);
    if (e == 0) return r;
    std::vector<int> alpha = x_exp;
    int s = x_sign;
    for (long long n = 1;; ++n) {
        for (size_t i = 0; i < alpha.size(); ++i) alpha[i] += q_exp[i];
        s *= q_sign;
        if (r.weight_of(alpha) > r.cap()) break;
        r = r * binomial_factor_like(proto, -s, alpha, -n * e);
    }
    return r;
}

inline Series macmahon(const std::vector<int>& x_exp, const std::vector<int>& q_exp, int x_sign,
                       int q_sign, long long e, int cap) {
    Series proto((int)x_exp.size(), cap);
    return macmahon_like(proto, x_exp, q_exp, x_sign, q_sign, e);
}

// thm_mr substitution p_k = -q_k on F = ({0} cap Ir) cup {k != 0 : k not in Ir}.
inline std::vector<bool> sign_flip_set(const Geometry& g) {
    std::vector<bool> flip(g.N, false);
    for (int k = 0; k < g.N; ++k) {
        const bool in = g.in_Ir(k);
        flip[k] = (k == 0) ? in : !in;
    }
    return flip;
}

inline Series sign_substitute(const Series& s, const Geometry& g) {
    if (s.nvars() != g.N) fail("CapMismatch", "series variable count must equal N");
    const auto flip = sign_flip_set(g);
    Series r(s.nvars(), s.cap(), s.weights());
    for (const auto& [e, c] : s.terms()) {
        long long parity = 0;
        for (int k = 0; k < s.nvars(); ++k)
            if (flip[k]) parity += e[k];
        r.add_term(e, (parity % 2) ? -c : c);
    }
    return r;
}

enum class BetaOrientation { BetaMinus, BetaPlus };

inline const char* beta_orientation_name(BetaOrientation o) {
    return o == BetaOrientation::BetaMinus ? "beta_minus" : "beta_plus";
}

// Sheaf-graded table over (n, beta): n = v_0, beta_k = v_0 - v_k (BetaMinus)
// or v_k - v_0 (BetaPlus).
using GradedKey = std::pair<int, std::vector<int>>;
using GradedTable = std::map<GradedKey, Int>;

inline GradedTable to_sheaf_grading(const Series& s, BetaOrientation orient) {
    GradedTable t;
    for (const auto& [v, c] : s.terms()) {
        GradedKey key;
        key.first = v[0];
        key.second.resize(v.size() > 0 ? v.size() - 1 : 0);
        for (size_t k = 1; k < v.size(); ++k)
            key.second[k - 1] =
                orient == BetaOrientation::BetaMinus ? v[0] - v[k] : v[k] - v[0];
        auto it = t.find(key);
        if (it == t.end())
            t.emplace(std::move(key), c);
        else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    return t;
}

}  // namespace wallx
