#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace germ {

/// Exact arbitrary-precision rational, the coefficient field everywhere.
/// cpp_rational keeps values in lowest terms with a positive denominator,
/// which is exactly the representation invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" (q > 0 after normalization). Throws std::invalid_argument on junk.
inline Rational rational_from_string(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "': " + e.what());
    }
}

inline Rational rational_pow(Rational base, unsigned exp) {
    Rational result{1};
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

}  // namespace germ
