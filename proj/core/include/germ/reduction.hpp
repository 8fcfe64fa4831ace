#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "germ/conformal.hpp"
#include "germ/harmonic.hpp"
#include "germ/jet.hpp"
#include "germ/linalg.hpp"
#include "germ/poly.hpp"

namespace germ {

/// (k, t) pairs the reduction theorems cover: target degree t above a
/// harmonic leading term of degree k.
bool reduction_pair_supported(int k, int t);

/// Highest target degree handled for order k in {5, 6, 7}: 6, 8, 10.
int max_reduction_depth(int k);

/// The monomials that survive a degree-t reduction over order k; the
/// normal-form supports of the theorems (pure x-powers plus minimal
/// y-degree companions).
std::vector<Monomial> residual_monomials(int k, int t);

/// Theorem clause implemented by a (k, t) step, e.g. "Thm1.3(2)".
std::string paper_clause(int k, int t);

/// f_5, g_6, g_7: the generator each order's normal form is written over.
Poly paper_generator(int k);

/// Matrix of the infinitesimal action (P, Q) -> degree-t component of
/// P * d(leading)/dx + Q * d(leading)/dy over homogeneous (P, Q) of degree
/// t - k + 1. This is the exact degree-t effect of composing with
/// id + (P, Q): the nonlinear cross terms of the composition land strictly
/// above degree t whenever t > k.
struct ActionMatrix {
    int leading_degree = 0;
    int target_degree = 0;
    std::vector<Monomial> row_monomials;                // degree-t, canonical order
    std::vector<std::pair<int, Monomial>> col_labels;   // (coordinate 0=x,1=y, degree-d monomial)
    QMatrix matrix;
    int rank = 0;
};

ActionMatrix action_matrix(const Poly& leading, int t);

/// Verdict of checking one of the paper's residual operators against the
/// solver-pinned functional: match means the operator row is proportional
/// to the pinned row, with the proportionality constant recorded. On a
/// mismatch, corrected_operator spells out the functional as a
/// constant-coefficient differential operator.
struct OperatorVerdict {
    Monomial target;
    std::string operator_name;
    bool match = false;
    Rational normalization;
    std::string corrected_operator;

    friend bool operator==(const OperatorVerdict&, const OperatorVerdict&) = default;
};

/// Record of one reduction step.
struct ReductionReport {
    HarmonicKind leading_kind = HarmonicKind::F;
    int leading_degree = 0;
    int target_degree = 0;
    DiffeoJet phi = DiffeoJet::identity(1);
    std::vector<std::pair<Monomial, Rational>> residual;  // all residual monomials, in order
    bool formula_check = false;
    int rank = 0;
    std::string paper_clause;

    friend bool operator==(const ReductionReport&, const ReductionReport&) = default;
};

/// Solves the exact linear system making the degree-t component of
/// (leading + tail) o (id + (P, Q)) supported only on residual_monomials(k, t).
/// leading must be f_k or g_k for k in {5, 6, 7}. Verification is by full
/// truncated composition, never by the linear model alone; an inconsistent
/// system is an internal invariant violation and throws std::logic_error.
ReductionReport reduce_step(const Poly& leading, const Poly& tail, int t);

/// The residual coefficients predicted for a homogeneous degree-t tail over
/// the paper's generator, i.e. the pinned linear functional applied to rho.
/// Equals the paper's operator formulas (Delta^3 rho / 6! and friends);
/// operator_verdicts records that comparison explicitly.
std::vector<std::pair<Monomial, Rational>> residual_formula(int k, int t, const Poly& rho);

/// Pinned functional for a given generator: row r = residual coefficients of
/// residual monomial r as a linear functional of the degree-t tail
/// coefficients. Computed once per (kind, k, t) by running the solver on
/// each monomial basis tail, then cached.
const QMatrix& pinned_residual_functional(HarmonicKind kind, int k, int t);

/// Paper-operator verdicts for the supported (k, t), against the pinned
/// functional over the paper's generator.
std::vector<OperatorVerdict> operator_verdicts(int k, int t);

struct ClassificationResult {
    int order = 0;
    std::string label;          // "regular", "Morse", ..., "harmonic-k5", "unsupported"
    std::string arnold_label;   // "D4-minus", "X_{1,0}", "N_16" when the paper names one
    Poly normal_form;
    std::vector<ReductionReport> steps;
    std::optional<LinearMap2> normalization;  // leading-term map, when one was applied
    std::string diagnostic;                   // set for "unsupported"

    friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

/// Chains reduce_step over target degrees k+1 .. depth. The leading
/// component of h must equal f_k or g_k exactly; the result is the
/// depth-jet with every handled degree supported only on its residual
/// monomials (for k = 5 the complete normal form f5 + c x^6).
ClassificationResult full_reduce(const Poly& h, int k, int depth);

/// Full classification for germs of order 1..7 with nonzero harmonic
/// leading term. Orders 1-4 return the classical label and cited normal
/// form without reduction; orders 5-7 normalize the leading term (exactly,
/// or fail) and delegate to full_reduce.
ClassificationResult classify(const Poly& h);

/// Theorem 1.2(3): f5 + c x^6 ~ f5 + c~ x^6 iff c = c~. Verifies the
/// Delta^3 invariance of the x^6 residual under both stabilizer generators
/// (reflection exactly, the 2*pi/5 rotation within 1e-9) before comparing.
bool uniqueness_check(const Rational& c, const Rational& c_tilde);

/// Comparison of the paper's printed phi table against the solver's phi on
/// a concrete degree-t tail: both maps are composed and the degree-t jets
/// diffed monomial by monomial. Printed-table typos show up as nonempty
/// jet_differences; typographic ambiguities in the source display are
/// listed in notes.
struct CrosscheckReport {
    int k = 0;
    int t = 0;
    DiffeoJet paper_phi = DiffeoJet::identity(1);
    DiffeoJet solver_phi = DiffeoJet::identity(1);
    bool agree = false;
    // (monomial, paper-jet coefficient, solver-jet coefficient)
    std::vector<std::tuple<Monomial, Rational, Rational>> jet_differences;
    std::vector<std::string> notes;
};

CrosscheckReport paper_diffeo_crosscheck(int k, int t, const Poly& rho);

}  // namespace germ
