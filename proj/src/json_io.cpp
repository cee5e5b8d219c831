#include "galepoly/json_io.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "galepoly/errors.hpp"

namespace galepoly {

namespace {

void checkSchemaVersion(const json& j)
{
    if (j.contains("schemaVersion") && j.at("schemaVersion") != kSchemaVersion)
        throw ParseError("unsupported schemaVersion " + j.at("schemaVersion").dump());
}

template <typename T>
T requireKey(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    try
    {
        return j.at(key).get<T>();
    }
    catch (const json::exception& e)
    {
        throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
    }
}

json labeledColumns(const MatrixXq& m, const std::vector<std::string>& labels, const char* coordsKey)
{
    json out = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        out.push_back({{"label", labels[static_cast<std::size_t>(c)]}, {coordsKey, toJson(VectorXq(m.col(c)))}});
    return out;
}

std::pair<MatrixXq, std::vector<std::string>> parseLabeledColumns(const json& list, Eigen::Index dim)
{
    if (!list.is_array())
        throw ParseError("expected an array of labeled vectors");
    MatrixXq m(dim, static_cast<Eigen::Index>(list.size()));
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < list.size(); ++c)
    {
        const json& entry = list[c];
        labels.push_back(requireKey<std::string>(entry, "label"));
        const VectorXq coords = vectorFromJson(entry.at("coords"));
        if (coords.size() != dim)
            throw ParseError("member \"" + labels.back() + "\" has " + std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(dim));
        m.col(static_cast<Eigen::Index>(c)) = coords;
    }
    return {std::move(m), std::move(labels)};
}

json labelsOf(const std::vector<std::string>& labels, const IndexSet& s)
{
    json out = json::array();
    for (auto i : s)
        out.push_back(labels.at(i));
    return out;
}

}  // namespace

json toJson(const Rational& q)
{
    return toString(q);
}

json toJson(const VectorXq& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(toString(v(i)));
    return out;
}

json toJson(const DependenceCertificate& cert)
{
    json out = {{"kind", toString(cert.kind)}};
    if (cert.kind == CertificateKind::PositiveDependence)
    {
        json lambda = json::array();
        for (const auto& l : cert.lambda)
            lambda.push_back(toString(l));
        out["lambda"] = lambda;
    }
    if (cert.functional)
        out["functional"] = toJson(*cert.functional);
    if (cert.deficientDirection)
        out["direction"] = toJson(*cert.deficientDirection);
    return out;
}

json toJson(const VectorConfiguration& config)
{
    return {{"schemaVersion", kSchemaVersion},
            {"m", config.dim()},
            {"vectors", labeledColumns(config.matrix(), config.labels(), "coords")}};
}

json toJson(const PointConfiguration& points)
{
    return {{"schemaVersion", kSchemaVersion},
            {"d", points.dim()},
            {"points", labeledColumns(points.matrix(), points.labels(), "coords")}};
}

json toJson(const IncidencePolytope& polytope)
{
    json facets = json::array();
    for (const auto& f : polytope.facets())
        facets.push_back(labelsOf(polytope.labels(), f));
    return {{"schemaVersion", kSchemaVersion},
            {"d", polytope.dim()},
            {"vertices", polytope.labels()},
            {"facets", facets}};
}

json toJson(const ManiPlan& plan)
{
    json complements = json::array();
    for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
        complements.push_back({{"name", plan.complementNames[j]},
                               {"members", labelsOf(plan.configuration.labels(), plan.designatedComplements[j])}});
    return {{"schemaVersion", kSchemaVersion},
            {"plan", {{"d", plan.d}, {"p", plan.p}, {"q", plan.q}, {"ell", plan.ell}}},
            {"configuration", toJson(plan.configuration)},
            {"designatedComplements", complements}};
}

json toJson(const FormulaTableRow& row)
{
    return {{"d", row.d}, {"p", row.p}, {"q", row.q}, {"nu", row.nu}, {"M", row.M}};
}

json toJson(const IlluminationReport& report, const IncidencePolytope& polytope)
{
    json diagonal = json::object();
    json missing = json::object();
    json uncovered = json::array();
    json adjacentToAll = json::array();
    for (std::size_t v = 0; v < polytope.vertexCount(); ++v)
    {
        if (report.diagonalPartner[v])
            diagonal[polytope.label(v)] = polytope.label(*report.diagonalPartner[v]);
        else
            uncovered.push_back(polytope.label(v));
        if (report.missingEdgePartner[v])
            missing[polytope.label(v)] = polytope.label(*report.missingEdgePartner[v]);
        else
            adjacentToAll.push_back(polytope.label(v));
    }
    return {{"isIlluminated", report.isIlluminated},
            {"isUnneighborly", report.isUnneighborly},
            {"diagonalPartner", diagonal},
            {"missingEdgePartner", missing},
            {"uncovered", uncovered},
            {"adjacentToAll", adjacentToAll}};
}

json reportJson(const ManiConstruction& c)
{
    json checks = json::object();
    json certificates = json::array();
    for (const auto& check : c.checks)
    {
        checks[check.name] = check.passed;
        certificates.push_back(
            {{"check", check.name}, {"passed", check.passed}, {"digest", digest(check.certificate)}, {"certificate", check.certificate}});
    }
    json summary = {{"illuminated", c.illuminated},
                    {"unneighborly", c.unneighborly},
                    {"nonsimplicial", c.nonsimplicial}};
    return {{"schemaVersion", kSchemaVersion},
            {"d", c.plan.d},
            {"p", c.plan.p},
            {"q", c.plan.q},
            {"ell", c.plan.ell},
            {"f0", c.f0},
            {"M", c.formula.M},
            {"mode", c.mode == BuildMode::Full ? "full" : "certificate"},
            {"checks", summary},
            {"allChecks", checks},
            {"certificates", certificates}};
}

json reportJson(const MarcusReport& r)
{
    json out = reportJson(r.construction);
    json witnesses = json::array();
    for (std::size_t u = 0; u < r.minimality.deletionWitnesses.size(); ++u)
    {
        json deleted = json::array();
        for (auto i : r.minimality.deletionWitnesses[u])
            deleted.push_back(r.dual.label(i));
        witnesses.push_back({{"removed", r.dual.label(u)}, {"thenDelete", deleted}});
    }
    out["checks"]["minimal2spanningDual"] = r.minimality.holds;
    out["dual"] = {{"n", r.dual.size()},
                   {"m", r.dual.dim()},
                   {"k", r.k},
                   {"minimal", r.minimality.holds},
                   {"conjecturedBound", r.conjecturedBound},
                   {"exceedsBound", r.dual.size() > r.conjecturedBound},
                   {"refutesBound", r.refutesBound},
                   {"minimalityWitnesses", witnesses}};
    out["dual"]["digest"] = digest(out["dual"]["minimalityWitnesses"]);
    return out;
}

Rational rationalFromJson(const json& j)
{
    if (j.is_string())
        return parseRational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError("rationals are encoded as \"num/den\" strings, got " + j.dump());
}

VectorXq vectorFromJson(const json& j)
{
    if (!j.is_array())
        throw ParseError("expected a coordinate array, got " + j.dump());
    VectorXq v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = rationalFromJson(j[i]);
    return v;
}

VectorConfiguration configurationFromJson(const json& j)
{
    checkSchemaVersion(j);
    const auto m = requireKey<long long>(j, "m");
    if (m < 0)
        throw ParseError("m must be nonnegative");
    auto [matrix, labels] = parseLabeledColumns(j.at("vectors"), static_cast<Eigen::Index>(m));
    try
    {
        return VectorConfiguration(static_cast<Eigen::Index>(m), std::move(matrix), std::move(labels));
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
}

PointConfiguration pointsFromJson(const json& j)
{
    checkSchemaVersion(j);
    const auto d = requireKey<long long>(j, "d");
    if (d < 0)
        throw ParseError("d must be nonnegative");
    auto [matrix, labels] = parseLabeledColumns(j.at("points"), static_cast<Eigen::Index>(d));
    try
    {
        return PointConfiguration(static_cast<Eigen::Index>(d), std::move(matrix), std::move(labels));
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
}

IncidencePolytope polytopeFromJson(const json& j)
{
    checkSchemaVersion(j);
    const auto d = requireKey<int>(j, "d");
    auto vertices = requireKey<std::vector<std::string>>(j, "vertices");
    const auto facets = requireKey<std::vector<std::vector<std::string>>>(j, "facets");
    try
    {
        return IncidencePolytope::fromLabeledFacets(d, std::move(vertices), facets);
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
}

ManiPlan planFromJson(const json& j)
{
    checkSchemaVersion(j);
    if (!j.contains("plan") || !j.contains("configuration"))
        throw ParseError("plan document needs \"plan\" and \"configuration\"");
    const json& params = j.at("plan");
    ManiPlan plan;
    plan.d = requireKey<int>(params, "d");
    plan.p = requireKey<int>(params, "p");
    plan.q = requireKey<int>(params, "q");
    plan.ell = requireKey<int>(params, "ell");
    plan.configuration = configurationFromJson(j.at("configuration"));
    if (plan.configuration.dim() != plan.p - 1)
        throw ParseError("configuration dimension must be p - 1");
    for (const auto& entry : requireKey<json>(j, "designatedComplements"))
    {
        plan.complementNames.push_back(requireKey<std::string>(entry, "name"));
        try
        {
            plan.designatedComplements.push_back(
                plan.configuration.indicesOf(requireKey<std::vector<std::string>>(entry, "members")));
        }
        catch (const Error& e)
        {
            throw ParseError(e.what());
        }
    }
    return plan;
}

DocumentKind detectDocumentKind(const json& j)
{
    if (!j.is_object())
        throw ParseError("input is not a JSON object");
    std::vector<DocumentKind> matches;
    if (j.contains("facets"))
        matches.push_back(DocumentKind::Polytope);
    if (j.contains("vectors"))
        matches.push_back(DocumentKind::Configuration);
    if (j.contains("points"))
        matches.push_back(DocumentKind::Points);
    if (j.contains("designatedComplements"))
        matches.push_back(DocumentKind::Plan);
    if (matches.empty())
        throw ParseError("cannot tell the schema: none of \"facets\", \"vectors\", \"points\", "
                         "\"designatedComplements\" is present");
    if (matches.size() > 1)
        throw ParseError("ambiguous input: several schema keys are present");
    return matches.front();
}

std::string digest(const json& j)
{
    const std::string text = j.dump();
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i)
        out << std::setw(2) << static_cast<int>(hash[i]);
    return out.str();
}

}  // namespace galepoly
