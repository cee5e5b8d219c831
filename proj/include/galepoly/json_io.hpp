#ifndef GALEPOLY_JSON_IO_HPP
#define GALEPOLY_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "galepoly/configuration.hpp"
#include "galepoly/lp.hpp"
#include "galepoly/mani.hpp"
#include "galepoly/polytope.hpp"

namespace galepoly {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json toJson(const Rational& q);
json toJson(const VectorXq& v);
json toJson(const DependenceCertificate& cert);
json toJson(const VectorConfiguration& config);
json toJson(const PointConfiguration& points);
json toJson(const IncidencePolytope& polytope);
json toJson(const ManiPlan& plan);
json toJson(const FormulaTableRow& row);
json toJson(const IlluminationReport& report, const IncidencePolytope& polytope);
/// Summary report: parameters, check verdicts and certificates (with digests).
json reportJson(const ManiConstruction& construction);
json reportJson(const MarcusReport& report);

Rational rationalFromJson(const json& j);
VectorXq vectorFromJson(const json& j);
VectorConfiguration configurationFromJson(const json& j);
PointConfiguration pointsFromJson(const json& j);
IncidencePolytope polytopeFromJson(const json& j);
ManiPlan planFromJson(const json& j);

enum class DocumentKind
{
    Polytope,
    Configuration,
    Points,
    Plan,
};

/// Detects the schema from its required key; rejects documents matching none or several.
DocumentKind detectDocumentKind(const json& j);

/// Hex SHA-256 of the compact serialization.
std::string digest(const json& j);

}  // namespace galepoly

#endif  // GALEPOLY_JSON_IO_HPP
