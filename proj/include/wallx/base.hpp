#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Domain error carrying the name of the violated precondition/invariant.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw DomainError(kind, what);
}

inline std::string rat_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p", "-p", "p/q". Decimal notation is rejected (exactness contract).
inline Rat parse_rat(const std::string& s) {
    if (s.find('.') != std::string::npos)
        fail("DecimalRejected", "rational expected, got decimal literal '" + s + "'");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) fail("BadRational", "zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        fail("BadRational", "cannot parse rational '" + s + "'");
    }
}

// Generalized binomial coefficient C(e, j) for integer e (possibly negative), j >= 0.
inline Int binomial_general(long long e, long long j) {
    Int num = 1, den = 1;
    for (long long i = 0; i < j; ++i) {
        num *= Int(e - i);
        den *= Int(i + 1);
    }
    return num / den;  // exact
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

}  // namespace wallx
