#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "germ/linalg.hpp"
#include "germ/poly.hpp"

namespace germ {

/// The two degree-k plane harmonics: F is the real part of (x+iy)^k, G the
/// imaginary part. Every expansion is generated from these defining
/// formulas, never transcribed from printed displays.
enum class HarmonicKind { F, G };

inline const char* to_string(HarmonicKind k) { return k == HarmonicKind::F ? "F" : "G"; }

/// f_k (kind F) or g_k (kind G); homogeneous of degree k and harmonic.
Poly harmonic_generator(int k, HarmonicKind kind);

/// [f_k, g_k], the standard basis of the degree-k harmonic space.
std::array<Poly, 2> harmonic_basis(int k);

Poly partial_x(const Poly& p);
Poly partial_y(const Poly& p);
Poly laplacian(const Poly& p);
Poly laplacian_power(const Poly& p, int l);

/// Delta^l p == 0.
bool is_l_harmonic(const Poly& p, int l);

/// Matrix of Delta^l restricted to the homogeneous degree-d coefficient
/// space (rows: degree d-2l monomials; cols: degree-d monomials, canonical
/// order). Degenerates to a zero-row matrix when d < 2l.
QMatrix laplacian_power_matrix(int degree, int l);

/// Canonical kernel basis of Delta^l on the degree-d homogeneous space.
std::vector<Poly> l_harmonic_basis(int degree, int l);

/// Name of the sampling PRNG, recorded in report output so property-test
/// failures reproduce across implementations. Draws come straight off
/// mt19937_64 with modulo reduction; std::uniform_int_distribution is not
/// used because its output is not specified portably.
inline constexpr const char* kPrngAlgorithm = "mt19937_64-mod/v1";

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi] via modulo reduction (bias is
    /// irrelevant at test scale; determinism across platforms is not).
    std::int64_t draw_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/// Recipe for one random homogeneous polynomial: integer coefficients in
/// [-coefficient_bound, coefficient_bound], optionally constrained to the
/// l-harmonic subspace. Same seed, same output.
struct SampleSpec {
    int degree = 1;
    std::optional<int> harmonicity;
    std::uint64_t seed = 0;
    int coefficient_bound = 9;
};

/// Random homogeneous polynomial of spec.degree (harmonicity must be absent).
/// Redraws on the all-zero outcome so the result is genuinely of that degree.
Poly sample_homogeneous(const SampleSpec& spec);

/// Random homogeneous l-harmonic polynomial: a seeded integer combination of
/// an exact kernel basis of Delta^l on the degree-d coefficient space.
Poly sample_l_harmonic(const SampleSpec& spec);

}  // namespace germ
