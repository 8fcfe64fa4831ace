#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "germ/poly.hpp"

namespace germ {

/// [dh/dx, dh/dy], the generators of the Jacobian ideal.
std::array<Poly, 2> jacobian_generators(const Poly& h);

/// Outcome of the rank test for m^k c m*J_h + m^(k+1): the degree-k
/// homogeneous components of m * dh/dx and m * dh/dy over all monomials m
/// with 1 <= deg m <= k must span the whole (k+1)-dimensional degree-k
/// space. witness is the first canonical-order degree-k monomial outside
/// the span, present exactly when the inclusion fails.
struct InclusionCertificate {
    int k = 0;
    int generator_count = 0;   // product vectors with a nonzero degree-k part
    int rank = 0;
    int required_rank = 0;     // k + 1
    bool holds = false;
    std::optional<Monomial> witness;

    friend bool operator==(const InclusionCertificate&, const InclusionCertificate&) = default;
};

InclusionCertificate check_inclusion(const Poly& h, int k);

/// Determinacy bound max(k, 2k-4) for f_k with its certificate chain.
/// k = 1, 2 are certified by convention (implicit function theorem, Morse);
/// k = 4 carries the rank certificate at degree 5 plus the degree-5
/// absorption annotation that upgrades R5 to R4. first_hold reports the
/// minimal degree at which the rank criterion actually holds (scanned up
/// to degree 12) -- for k >= 5 that is strictly above the bound.
struct DeterminacyReport {
    int k = 0;
    int bound = 0;
    std::vector<InclusionCertificate> chain;
    std::optional<int> first_hold;
    std::string annotation;

    friend bool operator==(const DeterminacyReport&, const DeterminacyReport&) = default;
};

DeterminacyReport determinacy_bound(int k);

}  // namespace germ
