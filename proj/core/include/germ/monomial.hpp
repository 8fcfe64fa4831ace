#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace germ {

/// A power product x^ex * y^ey. The ordering below is the canonical term
/// order used for every printed or serialized polynomial: ascending total
/// degree, ties broken by descending x-exponent. That is the order the
/// displays a0*x^d, a1*x^(d-1)*y, ... come out in.
struct Monomial {
    int ex = 0;
    int ey = 0;

    int degree() const { return ex + ey; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        // within a degree, larger ex first
        return b.ex <=> a.ex;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{a.ex + b.ex, a.ey + b.ey};
    }
};

/// Canonical text: "1", "x", "y^3", "x^2*y", ...
inline std::string to_string(const Monomial& m) {
    if (m.ex == 0 && m.ey == 0) return "1";
    std::string s;
    if (m.ex > 0) {
        s += "x";
        if (m.ex > 1) s += "^" + std::to_string(m.ex);
    }
    if (m.ey > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (m.ey > 1) s += "^" + std::to_string(m.ey);
    }
    return s;
}

}  // namespace germ
