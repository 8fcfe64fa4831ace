#pragma once

#include <stdexcept>

#include "germ/poly.hpp"

namespace germ {

/// A polynomial truncated at a declared jet order. Germs map the origin to
/// zero, so a nonzero body must have order >= 1 (no constant term).
struct GermJet {
    Poly body;
    int jet_order = 1;

    GermJet(Poly b, int k) : body(std::move(b)), jet_order(k) {
        if (k < 1) throw std::invalid_argument("jet order must be positive");
        if (body.total_degree() > k)
            throw std::invalid_argument("jet body exceeds its declared order");
        if (!body.is_zero() && body.order() < Order::of(1))
            throw std::invalid_argument("a germ has no constant term");
    }

    friend bool operator==(const GermJet&, const GermJet&) = default;
};

/// Pair of coordinate functions of a polynomial diffeomorphism-germ fixing
/// the origin. Construction truncates at jet_order and checks that the
/// linear part is invertible.
struct DiffeoJet {
    Poly px;
    Poly py;
    int jet_order = 1;

    DiffeoJet(Poly x_coord, Poly y_coord, int k);

    static DiffeoJet identity(int k) { return DiffeoJet(Poly::var_x(), Poly::var_y(), k); }

    /// id + (P, Q): the perturbations solved for by the reduction engine.
    static DiffeoJet perturbation(const Poly& p, const Poly& q, int k) {
        return DiffeoJet(Poly::var_x() + p, Poly::var_y() + q, k);
    }

    friend bool operator==(const DiffeoJet&, const DiffeoJet&) = default;
};

inline GermJet truncate_jet(const Poly& p, int k) { return GermJet(p.truncate(k), k); }

inline bool jet_equal(const Poly& p, const Poly& q, int k) {
    return p.truncate(k) == q.truncate(k);
}

/// k-jet of p(P(x,y), Q(x,y)). Every intermediate product discards degrees
/// above k, which is harmless because degree is monotone under
/// multiplication. Rejects maps whose coordinates have a constant term.
GermJet compose_truncated(const Poly& p, const DiffeoJet& phi, int k);

/// Jet of the composite map phi .. psi, i.e. (phi o psi)(v) = phi(psi(v)).
DiffeoJet compose_diffeo(const DiffeoJet& phi, const DiffeoJet& psi, int k);

}  // namespace germ
