#pragma once

#include <nlohmann/json.hpp>

#include "germ/conformal.hpp"
#include "germ/determinacy.hpp"
#include "germ/reduction.hpp"

namespace germ {

/// JSON conventions shared by every report: rationals are "p/q" strings
/// (never floats in exact mode), polynomials are canonical grammar text,
/// matrices are row-major arrays, Approx-mode entries are decimal strings.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const LinearMap2& map);
nlohmann::json to_json(const DiffeoJet& phi);
nlohmann::json to_json(const OperatorVerdict& v);
nlohmann::json to_json(const ReductionReport& r);
nlohmann::json to_json(const ClassificationResult& r);
nlohmann::json to_json(const InclusionCertificate& c, const Poly& h);
nlohmann::json to_json(const DeterminacyReport& r);
nlohmann::json to_json(const CrosscheckReport& r);
nlohmann::json to_json(const ActionMatrix& a);

Rational rational_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
LinearMap2 linear_map_from_json(const nlohmann::json& j);
DiffeoJet diffeo_from_json(const nlohmann::json& j);
ReductionReport reduction_report_from_json(const nlohmann::json& j);
ClassificationResult classification_from_json(const nlohmann::json& j);

}  // namespace germ
