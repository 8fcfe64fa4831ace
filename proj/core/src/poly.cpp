#include "germ/poly.hpp"

#include "germ/jet.hpp"

namespace germ {

Poly mul_truncated(const Poly& a, const Poly& b, int k) {
    Poly out;
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.degree() > k) break;
        const int room = k - ma.degree();
        for (const auto& [mb, cb] : b.terms()) {
            if (mb.degree() > room) break;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Poly pow_truncated(const Poly& p, int n, int k) {
    Poly out{Rational{1}};
    for (int i = 0; i < n; ++i) out = mul_truncated(out, p, k);
    return out;
}

DiffeoJet::DiffeoJet(Poly x_coord, Poly y_coord, int k)
    : px(x_coord.truncate(k)), py(y_coord.truncate(k)), jet_order(k) {
    if (k < 1) throw std::invalid_argument("diffeo jet order must be positive");
    if (px.coeff(Monomial{0, 0}) != 0 || py.coeff(Monomial{0, 0}) != 0)
        throw std::invalid_argument("diffeomorphism-germ must fix the origin");
    const Rational a = px.coeff(Monomial{1, 0});
    const Rational b = px.coeff(Monomial{0, 1});
    const Rational c = py.coeff(Monomial{1, 0});
    const Rational d = py.coeff(Monomial{0, 1});
    if (a * d - b * c == 0)
        throw std::invalid_argument("diffeomorphism-germ needs an invertible linear part");
}

GermJet compose_truncated(const Poly& p, const DiffeoJet& phi, int k) {
    if (phi.px.coeff(Monomial{0, 0}) != 0 || phi.py.coeff(Monomial{0, 0}) != 0)
        throw std::invalid_argument("composition requires coordinates without constant term");

    // Cache truncated powers up to the highest exponent actually used.
    int max_ex = 0, max_ey = 0;
    for (const auto& [m, c] : p.terms()) {
        max_ex = std::max(max_ex, m.ex);
        max_ey = std::max(max_ey, m.ey);
    }
    std::vector<Poly> xp(static_cast<std::size_t>(max_ex) + 1), yp(static_cast<std::size_t>(max_ey) + 1);
    xp[0] = Poly{Rational{1}};
    for (int i = 1; i <= max_ex; ++i) xp[i] = mul_truncated(xp[i - 1], phi.px, k);
    yp[0] = Poly{Rational{1}};
    for (int j = 1; j <= max_ey; ++j) yp[j] = mul_truncated(yp[j - 1], phi.py, k);

    Poly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > k) break;  // coordinates have order >= 1
        out += c * mul_truncated(xp[m.ex], yp[m.ey], k);
    }
    return GermJet(out.truncate(k), k);
}

DiffeoJet compose_diffeo(const DiffeoJet& phi, const DiffeoJet& psi, int k) {
    return DiffeoJet(compose_truncated(phi.px, psi, k).body,
                     compose_truncated(phi.py, psi, k).body, k);
}

}  // namespace germ
