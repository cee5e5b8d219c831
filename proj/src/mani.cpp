#include "galepoly/mani.hpp"

#include <algorithm>
#include <stdexcept>

#include "galepoly/errors.hpp"
#include "galepoly/gale.hpp"
#include "galepoly/json_io.hpp"
#include "galepoly/lp.hpp"

namespace galepoly {

long long ceilSqrt(long long n)
{
    if (n <= 0)
        return 0;
    long long lo = 0;
    long long hi = 1;
    while (hi * hi < n)
        hi *= 2;
    while (lo < hi)
    {
        const long long mid = lo + (hi - lo) / 2;
        if (mid * mid >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

int blockParameter(int d)
{
    if (d < 1)
        throw BadParameters("p(d) needs d >= 1");
    int p = 1;
    while (static_cast<long long>(p) * (p + 1) < d)
        ++p;
    return p;
}

long long mcmullenLinearForm(long long d)
{
    return d + 1 + ceilSqrt(4 * d);
}

long long mcmullenSquareForm(long long d)
{
    // (sqrt(d) + 1)^2 <= N  <=>  2 sqrt(N) <= N + 1 - d  <=>  4N <= (N + 1 - d)^2 with N + 1 - d >= 0.
    long long n = d + 1;
    while (true)
    {
        const long long slack = n + 1 - d;
        if (slack >= 0 && slack * slack >= 4 * n)
            return n;
        ++n;
    }
}

FormulaTableRow formulas(int d)
{
    FormulaTableRow row;
    row.d = d;
    row.p = blockParameter(d);
    row.q = (d + row.p - 1) / row.p;
    row.nu = d + row.p + row.q + 1;
    row.M = std::min(2 * d, row.nu);
    const long long twice = 2LL * d;
    if (std::min(twice, mcmullenLinearForm(d)) != row.M || std::min(twice, mcmullenSquareForm(d)) != row.M)
        throw std::logic_error("closed forms of M(" + std::to_string(d) + ") disagree");
    return row;
}

ManiPlan buildA(int d, int p, int ell)
{
    if (d < 6)
        throw BadParameters("the construction needs d >= 6, got d = " + std::to_string(d));
    if (p < 3)
        throw BadParameters("p = " + std::to_string(p) + " gives a simplicial polytope; need p >= 3");
    const int q = (d + p - 1) / p;
    if (q < 2)
        throw BadParameters("q = ceil(d/p) = " + std::to_string(q) + " leaves no valid l; need q >= 2");
    if (ell < 1 || ell > q - 1)
        throw BadParameters("l must satisfy 1 <= l <= q - 1 = " + std::to_string(q - 1));

    ManiPlan plan;
    plan.d = d;
    plan.p = p;
    plan.q = q;
    plan.ell = ell;

    const int m = p - 1;
    const int tail = d + p - p * q;  // size of the third group: 1, -e_1, ..., -e_{tail-1}
    const int n = d + p;
    MatrixXq vectors = MatrixXq::Zero(m, n);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));

    Eigen::Index col = 0;
    auto appendBasis = [&](int sign, const std::string& prefix, int members) {
        IndexSet indices;
        for (int k = 0; k < members; ++k)
        {
            if (k == 0)
                vectors.col(col).setConstant(-sign);
            else
                vectors(k - 1, col) = sign;
            labels.push_back(prefix + "." + std::to_string(k));
            indices.push_back(static_cast<std::size_t>(col));
            ++col;
        }
        return indices;
    };

    std::vector<IndexSet> copies;
    for (int i = 1; i <= ell; ++i)
    {
        plan.complementNames.push_back("B" + std::to_string(i));
        copies.push_back(appendBasis(1, "B" + std::to_string(i), p));
    }
    for (int j = 1; j <= q - ell; ++j)
    {
        plan.complementNames.push_back("Bt" + std::to_string(j));
        copies.push_back(appendBasis(-1, "Bt" + std::to_string(j), p));
    }
    IndexSet third = appendBasis(-1, "T", tail);

    // B' completes the third group with the last pq - d members of B~_1.
    const IndexSet& firstNegated = copies[static_cast<std::size_t>(ell)];
    IndexSet prime = third;
    prime.insert(prime.end(), firstNegated.end() - (p * q - d), firstNegated.end());
    std::sort(prime.begin(), prime.end());

    plan.designatedComplements = std::move(copies);
    plan.designatedComplements.push_back(std::move(prime));
    plan.complementNames.push_back("B'");
    plan.configuration = VectorConfiguration(m, std::move(vectors), std::move(labels));
    return plan;
}

namespace {

void record(std::vector<CheckRecord>& checks, const std::string& name, bool passed, json certificate)
{
    checks.push_back({name, passed, certificate});
    if (!passed)
        throw CertificateFailure(name, certificate.dump());
}

int defaultBlockParameter(int d)
{
    return d == 6 ? 3 : blockParameter(d);
}

std::optional<std::pair<std::size_t, std::size_t>> firstOppositePair(const VectorConfiguration& config)
{
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j)
            if (config.vector(i) == -config.vector(j))
                return std::make_pair(i, j);
    return std::nullopt;
}

json labelList(const std::vector<std::string>& labels, const IndexSet& s)
{
    json out = json::array();
    for (auto i : s)
        out.push_back(labels.at(i));
    return out;
}

VectorXq midpoint(const PointConfiguration& points, std::size_t a, std::size_t b)
{
    return (points.point(a) + points.point(b)) / Rational(2);
}

/// Stacks the designated facets one after another, apex j on facet j.
PointConfiguration stackGeometrically(const PointConfiguration& base, const std::vector<IndexSet>& facets,
                                      const std::vector<std::string>& apexLabels, const ExecOptions& exec,
                                      json& certificate)
{
    PointConfiguration current = base;
    certificate = json::array();
    for (std::size_t j = 0; j < facets.size(); ++j)
    {
        const StackPoint apex = geometricStackPoint(current, facets[j], exec);
        certificate.push_back({{"apex", apexLabels[j]},
                               {"facet", labelList(current.labels(), facets[j])},
                               {"epsilon", toJson(apex.epsilon)},
                               {"halvings", apex.halvings}});
        current = current.withPoint(apex.point, apexLabels[j]);
    }
    return current;
}

void runFullMode(ManiConstruction& c, const ManiOptions& options, const std::pair<std::size_t, std::size_t>& pair)
{
    const ManiPlan& plan = c.plan;
    const VectorConfiguration& a = plan.configuration;
    const std::size_t n = a.size();
    const auto d = static_cast<std::size_t>(plan.d);

    IncidencePolytope q = incidenceFromGale(a, options.exec);
    {
        std::size_t nonsimplex = 0;
        for (const auto& f : q.facets())
            nonsimplex += f.size() > d ? 1 : 0;
        c.checks.push_back({"galeFacetEnumeration",
                            true,
                            {{"vertices", q.vertexCount()},
                             {"facets", q.facetCount()},
                             {"nonsimplexFacets", nonsimplex},
                             {"simplexFacets", q.facetCount() - nonsimplex}}});
    }

    json designated = json::array();
    bool allFacets = true;
    for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
    {
        const IndexSet facet = complementOf(plan.designatedComplements[j], n);
        const bool ok = q.findFacet(facet).has_value() && facet.size() == d;
        allFacets = allFacets && ok;
        designated.push_back({{"name", plan.complementNames[j]},
                              {"complement", labelList(a.labels(), plan.designatedComplements[j])},
                              {"simplexFacet", ok}});
    }
    record(c.checks, "designatedSimplexFacets", allFacets, designated);

    const IndexSet pairFacet = complementOf({pair.first, pair.second}, n);
    record(c.checks, "nonsimplicialQ", q.findFacet(pairFacet).has_value() && pairFacet.size() > d,
           {{"oppositePair", {a.label(pair.first), a.label(pair.second)}}, {"facetSize", pairFacet.size()}});

    IncidencePolytope stacked = q;
    for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
        stacked = stackSimplexFacet(stacked, complementOf(plan.designatedComplements[j], n), c.apexLabels[j]);

    c.f0 = stacked.vertexCount();
    const IlluminationReport illumination = illuminationReport(stacked);
    const json illuminationCert = toJson(illumination, stacked);
    c.illuminated = illumination.isIlluminated;
    c.unneighborly = illumination.isUnneighborly;
    record(c.checks, "illuminated", c.illuminated, illuminationCert);
    record(c.checks, "unneighborly", c.unneighborly, illuminationCert);

    const auto survivor = stacked.findFacet(pairFacet);
    c.nonsimplicial = survivor.has_value();
    record(c.checks, "nonsimplicial", c.nonsimplicial,
           {{"facet", labelList(stacked.labels(), pairFacet)}, {"facetSize", pairFacet.size()}, {"d", plan.d}});

    if (options.geometricCrossCheck)
    {
        PointConfiguration realizedQ = realize(a, options.exec);
        bool facetsSupported = true;
        for (const auto& f : q.facets())
            facetsSupported = facetsSupported && supportingHyperplane(realizedQ.matrix(), f).has_value();
        record(c.checks, "geometricFacetsOfQ", facetsSupported, {{"facets", q.facetCount()}});

        std::vector<IndexSet> facets;
        for (const auto& s : plan.designatedComplements)
            facets.push_back(complementOf(s, n));
        json stackCert;
        PointConfiguration realizedP = stackGeometrically(realizedQ, facets, c.apexLabels, options.exec, stackCert);
        c.checks.push_back({"geometricStacking", true, stackCert});

        const std::size_t total = stacked.vertexCount();
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t u = 0; u < total; ++u)
            for (std::size_t v = u + 1; v < total; ++v)
                pairs.emplace_back(u, v);
        const auto agree = parallelMap(pairs.size(), options.exec, [&](std::size_t k) {
            const auto [u, v] = pairs[k];
            const bool geometric = interiorPointTest(realizedP, midpoint(realizedP, u, v)).spans;
            return geometric == isInnerDiagonal(stacked, u, v);
        });
        json mismatches = json::array();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (!agree[k])
                mismatches.push_back({stacked.label(pairs[k].first), stacked.label(pairs[k].second)});
        record(c.checks, "geometricDiagonalAgreement",
               mismatches.empty() && realizedP.labels() == stacked.labels(),
               {{"pairsCompared", pairs.size()}, {"mismatches", mismatches}});
        c.realizedQ = std::move(realizedQ);
        c.realizedP = std::move(realizedP);
    }

    c.q = std::move(q);
    c.p = std::move(stacked);
}

void runCertificateMode(ManiConstruction& c, const ManiOptions& options,
                        const std::pair<std::size_t, std::size_t>& pair)
{
    const ManiPlan& plan = c.plan;
    const VectorConfiguration& a = plan.configuration;
    const std::size_t n = a.size();
    const auto d = static_cast<std::size_t>(plan.d);

    // Each designated complement is a minimal coface: the whole set has a positive
    // dependence and no set obtained by dropping one member does.
    json designated = json::array();
    bool allMinimal = true;
    for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
    {
        const IndexSet& s = plan.designatedComplements[j];
        const CofaceReport whole = isCoface(a, s);
        bool minimal = whole.isCoface;
        for (std::size_t drop = 0; drop < s.size() && minimal; ++drop)
        {
            IndexSet smaller = s;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
            minimal = !isCoface(a, smaller).isCoface;
        }
        const bool ok = minimal && n - s.size() == d;
        allMinimal = allMinimal && ok;
        designated.push_back({{"name", plan.complementNames[j]},
                              {"complement", labelList(a.labels(), s)},
                              {"dependence", toJson(whole.certificate)},
                              {"simplexFacet", ok}});
    }
    record(c.checks, "designatedSimplexFacets", allMinimal, designated);

    const CofaceReport pairReport = isCoface(a, {pair.first, pair.second});
    const IndexSet pairFacet = complementOf({pair.first, pair.second}, n);
    record(c.checks, "nonsimplicialQ", pairReport.isCoface && pairFacet.size() > d,
           {{"oppositePair", {a.label(pair.first), a.label(pair.second)}},
            {"dependence", toJson(pairReport.certificate)},
            {"facetSize", pairFacet.size()}});

    PointConfiguration realizedQ = realize(a, options.exec);
    std::vector<IndexSet> facets;
    bool supported = true;
    for (const auto& s : plan.designatedComplements)
    {
        facets.push_back(complementOf(s, n));
        supported = supported && supportingHyperplane(realizedQ.matrix(), facets.back()).has_value();
    }
    supported = supported && supportingHyperplane(realizedQ.matrix(), pairFacet).has_value();
    record(c.checks, "geometricFacetsOfQ", supported, {{"checkedFacets", facets.size() + 1}});

    json stackCert;
    PointConfiguration realizedP = stackGeometrically(realizedQ, facets, c.apexLabels, options.exec, stackCert);
    c.checks.push_back({"geometricStacking", true, stackCert});

    const std::size_t total = realizedP.size();
    const auto extreme = parallelMap(total, options.exec, [&](std::size_t i) {
        return isVertex(realizedP.matrix(), static_cast<Eigen::Index>(i));
    });
    c.f0 = static_cast<std::size_t>(std::count(extreme.begin(), extreme.end(), true));
    record(c.checks, "allPointsAreVertices", c.f0 == total, {{"points", total}, {"vertices", c.f0}});

    // Vertex u of Q sees the apex of the first designated facet that misses it.
    std::vector<std::size_t> partner(n);
    for (std::size_t u = 0; u < n; ++u)
    {
        for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
        {
            const auto& s = plan.designatedComplements[j];
            if (std::binary_search(s.begin(), s.end(), u))
            {
                partner[u] = n + j;
                break;
            }
        }
    }
    const auto interior = parallelMap(n, options.exec, [&](std::size_t u) {
        return interiorPointTest(realizedP, midpoint(realizedP, u, partner[u])).spans;
    });
    json partners = json::object();
    bool illuminated = std::all_of(interior.begin(), interior.end(), [](bool b) { return b; });
    for (std::size_t u = 0; u < n; ++u)
        partners[realizedP.label(u)] = realizedP.label(partner[u]);
    for (std::size_t j = 0; j < plan.designatedComplements.size(); ++j)
        partners[realizedP.label(n + j)] = realizedP.label(plan.designatedComplements[j].front());
    c.illuminated = illuminated;
    record(c.checks, "illuminated", c.illuminated, {{"method", "midpointInteriorLP"}, {"diagonalPartner", partners}});

    // Inner diagonals are missing edges.
    c.unneighborly = c.illuminated;
    record(c.checks, "unneighborly", c.unneighborly, {{"method", "impliedByIllumination"}, {"missingEdgePartner", partners}});

    c.nonsimplicial = supportingHyperplane(realizedP.matrix(), pairFacet).has_value();
    record(c.checks, "nonsimplicial", c.nonsimplicial,
           {{"facet", labelList(realizedP.labels(), pairFacet)}, {"facetSize", pairFacet.size()}, {"d", plan.d}});

    c.realizedQ = std::move(realizedQ);
    c.realizedP = std::move(realizedP);
}

}  // namespace

ManiConstruction constructNonsimplicialMani(int d, const ManiOptions& options)
{
    if (d < 6)
        throw BadParameters("nonsimplicial Mani polytopes exist only for d >= 6, got d = " + std::to_string(d));
    ManiConstruction c;
    c.mode = options.mode;
    c.formula = formulas(d);
    const int defaultP = defaultBlockParameter(d);
    const int p = options.p.value_or(defaultP);
    c.defaultParameters = p == defaultP;
    c.plan = buildA(d, p, options.ell.value_or(1));
    for (int j = 1; j <= c.plan.q + 1; ++j)
        c.apexLabels.push_back("s" + std::to_string(j));

    const VectorConfiguration& a = c.plan.configuration;
    const std::size_t n = a.size();
    record(c.checks, "vectorCount", n == static_cast<std::size_t>(d + p),
           {{"vectors", n}, {"expected", d + p}, {"m", a.dim()}});

    VertexSet covered(n);
    for (const auto& s : c.plan.designatedComplements)
        for (auto i : s)
            covered.set(i);
    record(c.checks, "complementsCoverVertices", covered.all(), {{"complements", c.plan.designatedComplements.size()}});

    const auto pair = firstOppositePair(a);
    if (!pair)
        throw CertificateFailure("nonsimplicialQ", "no opposite pair in A");

    if (options.mode == BuildMode::Full)
        runFullMode(c, options, *pair);
    else
        runCertificateMode(c, options, *pair);

    const auto expected = static_cast<std::size_t>(d + p + c.plan.q + 1);
    record(c.checks, "vertexCount", c.f0 == expected, {{"f0", c.f0}, {"expected", expected}});
    if (c.defaultParameters)
        record(c.checks, "maniVertexCount", c.f0 == static_cast<std::size_t>(c.formula.M),
               {{"f0", c.f0}, {"M", c.formula.M}});
    return c;
}

StackPoint geometricStackPoint(const PointConfiguration& points, const IndexSet& facet, const ExecOptions& exec,
                               int maxHalvings)
{
    const Eigen::Index d = points.dim();
    if (static_cast<Eigen::Index>(facet.size()) != d)
        throw NotASupportedSimplex("facet has " + std::to_string(facet.size()) + " points, expected " +
                                   std::to_string(d));
    const auto plane = supportingHyperplane(points.matrix(), facet);
    if (!plane)
        throw NotASupportedSimplex("points are not affinely independent or do not span a supporting hyperplane");

    VectorXq barycenter = VectorXq::Zero(d);
    for (auto i : facet)
        barycenter += points.point(i);
    barycenter /= Rational(static_cast<long>(facet.size()));

    const std::size_t n = points.size();
    const IndexSet off = complementOf(facet, n);
    Rational epsilon = 1;
    for (int halvings = 0; halvings <= maxHalvings; ++halvings, epsilon /= 2)
    {
        const VectorXq x = barycenter + epsilon * plane->normal;
        if (plane->evaluate(x) <= 0)
            continue;
        const PointConfiguration grown = points.withPoint(x, "apex");
        const MatrixXq& all = grown.matrix();

        // Beyond the stacked facet only: each ridge F \ {w} spans a facet with the apex.
        bool onlyFacet = true;
        for (std::size_t k = 0; k < facet.size() && onlyFacet; ++k)
        {
            IndexSet ridge;
            for (std::size_t t = 0; t < facet.size(); ++t)
                if (t != k)
                    ridge.push_back(facet[t]);
            ridge.push_back(n);
            onlyFacet = supportingHyperplane(all, ridge).has_value();
        }
        if (!onlyFacet)
            continue;

        const auto lost = firstIndexWhere(n, exec, [&](std::size_t i) {
            return !isVertex(all, static_cast<Eigen::Index>(i));
        });
        if (lost)
            continue;

        const auto blocked = firstIndexWhere(off.size(), exec, [&](std::size_t k) {
            const VectorXq mid = (x + points.point(off[k])) / Rational(2);
            return !interiorPointTest(all, mid).spans;
        });
        if (blocked)
            continue;

        return StackPoint{x, epsilon, halvings};
    }
    throw NoEpsilonFound("no valid apex after " + std::to_string(maxHalvings) + " halvings");
}

namespace {

bool coverSearch(const std::vector<VertexSet>& complements, std::size_t budget, VertexSet& covered,
                 std::vector<std::size_t>& chosen)
{
    if (covered.all())
        return true;
    if (chosen.size() == budget)
        return false;
    const std::size_t target = (~covered).find_first();
    for (std::size_t f = 0; f < complements.size(); ++f)
    {
        if (!complements[f].test(target) || std::find(chosen.begin(), chosen.end(), f) != chosen.end())
            continue;
        const VertexSet before = covered;
        covered |= complements[f];
        chosen.push_back(f);
        if (coverSearch(complements, budget, covered, chosen))
            return true;
        chosen.pop_back();
        covered = before;
    }
    return false;
}

}  // namespace

SimplicialManiResult maniSimplicial(int d)
{
    if (d < 3)
        throw BadParameters("Mani's cyclic construction needs d >= 3");
    const FormulaTableRow row = formulas(d);
    IncidencePolytope cyclic = cyclicPolytope(d, d + row.p);
    const std::size_t n = cyclic.vertexCount();
    const auto budget = static_cast<std::size_t>(row.q + 1);

    std::vector<VertexSet> complements;
    complements.reserve(cyclic.facetCount());
    for (std::size_t f = 0; f < cyclic.facetCount(); ++f)
        complements.push_back(~cyclic.facetSet(f));

    // Greedy: most newly covered vertices, least facet index on ties.
    std::vector<std::size_t> chosen;
    VertexSet covered(n);
    while (chosen.size() < budget && !covered.all())
    {
        std::size_t best = 0;
        std::size_t gain = 0;
        for (std::size_t f = 0; f < complements.size(); ++f)
        {
            const std::size_t g = (complements[f] - covered).count();
            if (g > gain)
            {
                gain = g;
                best = f;
            }
        }
        covered |= complements[best];
        chosen.push_back(best);
    }
    if (!covered.all())
    {
        chosen.clear();
        covered = VertexSet(n);
        if (!coverSearch(complements, budget, covered, chosen))
            throw NoCoverFound("no " + std::to_string(budget) + " facets of cyclic(" + std::to_string(d) + ", " +
                               std::to_string(n) + ") have complements covering every vertex");
    }

    std::vector<IndexSet> stackedFacets;
    IncidencePolytope stacked = cyclic;
    for (std::size_t j = 0; j < chosen.size(); ++j)
    {
        stackedFacets.push_back(cyclic.facets()[chosen[j]]);
        stacked = stackSimplexFacet(stacked, stackedFacets.back(), "s" + std::to_string(j + 1));
    }

    SimplicialManiResult result{row, std::move(cyclic), std::move(stackedFacets), std::move(stacked)};
    result.illuminated = illuminationReport(result.polytope).isIlluminated;
    result.simplicial = result.polytope.isSimplicial();
    result.isManiPolytope = result.illuminated && result.polytope.vertexCount() == static_cast<std::size_t>(row.M);
    return result;
}

MarcusReport unneighborlyDualPipeline(int d, const ExecOptions& exec)
{
    ManiOptions options;
    options.mode = BuildMode::Certificate;
    options.exec = exec;

    MarcusReport report;
    report.construction = constructNonsimplicialMani(d, options);
    report.dual = galeDual(*report.construction.realizedP);
    report.minimality = isMinimalKSpanning(report.dual, report.k, exec);
    report.conjecturedBound = 2 * static_cast<std::size_t>(report.k) * static_cast<std::size_t>(report.dual.dim());
    report.refutesBound = report.minimality.holds && report.dual.size() > report.conjecturedBound;
    return report;
}

MarcusReport marcusCounterexample(const ExecOptions& exec)
{
    return unneighborlyDualPipeline(36, exec);
}

}  // namespace galepoly
