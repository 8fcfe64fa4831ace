#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/harmonic.hpp"
#include "germ/jet.hpp"
#include "germ/poly.hpp"

namespace germ {

/// k-th roots of rationals are generally irrational, so linear maps carry a
/// mode tag instead of pretending exactness. Exact maps have Rational
/// entries and support exact composition; Approx maps live in doubles and
/// every downstream claim about them is a <= 1e-9 coefficient bound.
enum class MapMode { Exact, Approx };

inline const char* to_string(MapMode m) { return m == MapMode::Exact ? "exact" : "approx"; }

/// Invertible 2x2 linear map. Conformality (columns orthogonal with equal
/// norm) is checked exactly in Exact mode and within 1e-12 relative in
/// Approx mode; invertibility in Approx mode means |det| > 1e-9.
class LinearMap2 {
public:
    static LinearMap2 exact(Rational a, Rational b, Rational c, Rational d);
    static LinearMap2 approx(double a, double b, double c, double d);
    static LinearMap2 identity() { return exact(1, 0, 0, 1); }
    /// diag(1, -1).
    static LinearMap2 reflection() { return exact(1, 0, 0, -1); }
    /// Exact rotation-scaling z -> (c + i s) z.
    static LinearMap2 rotation_scaling(const Rational& c, const Rational& s) {
        return exact(c, -s, s, c);
    }
    static LinearMap2 rotation(double theta);

    MapMode mode() const { return mode_; }
    bool is_exact() const { return mode_ == MapMode::Exact; }

    /// Entry row r, column c as a double (valid in both modes).
    double entry(int r, int c) const;
    /// Exact entry; throws std::logic_error in Approx mode.
    const Rational& exact_entry(int r, int c) const;

    double det() const;
    Rational exact_det() const;
    bool is_conformal() const;

    /// Square conformal factor s with laplacian(p o phi) = s * (laplacian p) o phi;
    /// equals |det| for a conformal map. Exact mode only.
    Rational conformal_factor() const;

    LinearMap2 inverse() const;
    friend LinearMap2 operator*(const LinearMap2& a, const LinearMap2& b);

    friend bool operator==(const LinearMap2&, const LinearMap2&) = default;

private:
    LinearMap2() = default;
    MapMode mode_ = MapMode::Exact;
    std::array<Rational, 4> exact_{};   // row-major, valid in Exact mode
    std::array<double, 4> approx_{};    // row-major, always populated
};

/// Exact substitution x -> a x + b y, y -> c x + d y. Exact mode only.
Poly compose_linear(const Poly& p, const LinearMap2& map);

/// DiffeoJet with the map's linear part as coordinates (Exact mode only).
DiffeoJet linear_diffeo(const LinearMap2& map, int jet_order);

// ---------------------------------------------------------------------------
// Double-precision polynomial path for Approx-mode verification.

using ApproxPoly = std::map<Monomial, double>;

ApproxPoly to_approx(const Poly& p);
ApproxPoly compose_linear_approx(const Poly& p, const LinearMap2& map);
ApproxPoly partial_x(const ApproxPoly& p);
ApproxPoly partial_y(const ApproxPoly& p);
ApproxPoly laplacian(const ApproxPoly& p);
ApproxPoly laplacian_power(const ApproxPoly& p, int l);
/// max |coefficient of (p - q)|.
double max_coeff_distance(const ApproxPoly& p, const ApproxPoly& q);

// ---------------------------------------------------------------------------

/// Unique (a, b) with h = a*f_k + b*g_k, by exact linear solve against the
/// basis. Rejects non-homogeneous input (naming an offending monomial) and
/// non-harmonic input (reporting Delta h != 0).
std::pair<Rational, Rational> leading_as_complex(const Poly& h, int k);

/// Conformal map phi with h o phi equal to the target generator. The map is
/// z -> mu z with mu^k = 1/(a - i b) for target F and mu^k = -i/(a - i b)
/// for target G, mu on the principal branch. When mu is a rational complex
/// number (verified exactly) the result is Exact and the composition is an
/// identity; otherwise it is Approx and every coefficient of
/// h o phi - target is below 1e-9 in absolute value.
LinearMap2 normalize_leading(const Poly& h, int k, HarmonicKind target);

/// Element of the stabilizer group of f_k: rotation by 2*pi*index/k
/// followed by diag(1,-1) when reflected.
struct StabilizerElement {
    int rotation_index = 0;
    bool reflected = false;

    LinearMap2 to_map(int k) const;

    friend bool operator==(const StabilizerElement&, const StabilizerElement&) = default;
};

/// The two generators: rotation by 2*pi/k and the reflection diag(1,-1).
/// The rotation is exact-rational only for k in {1, 2, 4}; cos(2*pi/k) or
/// sin(2*pi/k) is irrational for every other k (including 3 and 6, where
/// only the trace is rational), so those rotations are Approx.
std::vector<LinearMap2> stabilizer_generators(int k);

}  // namespace germ
