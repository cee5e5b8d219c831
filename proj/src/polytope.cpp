#include "galepoly/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "galepoly/errors.hpp"

namespace galepoly {

IncidencePolytope::IncidencePolytope(int dim, std::vector<std::string> vertexLabels, std::vector<IndexSet> facets)
    : dim_(dim), labels_(std::move(vertexLabels)), facets_(std::move(facets))
{
    const std::size_t n = labels_.size();
    if (dim_ < 1)
        throw InvalidPolytope("dimension must be at least 1");
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n)
            throw InvalidPolytope("vertex labels must be distinct");
    }
    if (facets_.empty())
        throw InvalidPolytope("facet list is empty");

    for (auto& f : facets_)
    {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty())
            throw InvalidPolytope("empty facet");
        if (f.back() >= n)
            throw InvalidPolytope("facet refers to vertex index " + std::to_string(f.back()));
        if (f.size() == n)
            throw InvalidPolytope("a facet contains every vertex");
    }
    std::sort(facets_.begin(), facets_.end());

    facetSets_.reserve(facets_.size());
    for (const auto& f : facets_)
    {
        VertexSet s(n);
        for (auto v : f)
            s.set(v);
        facetSets_.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < facetSets_.size(); ++a)
    {
        for (std::size_t b = a + 1; b < facetSets_.size(); ++b)
        {
            if (facetSets_[a].is_subset_of(facetSets_[b]) || facetSets_[b].is_subset_of(facetSets_[a]))
                throw InvalidPolytope("facets " + std::to_string(a) + " and " + std::to_string(b) +
                                      " are comparable");
        }
    }

    incidence_.assign(n, boost::dynamic_bitset<>(facets_.size()));
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (auto v : facets_[f])
            incidence_[v].set(f);
    for (std::size_t v = 0; v < n; ++v)
        if (incidence_[v].none())
            throw InvalidPolytope("vertex \"" + labels_[v] + "\" lies on no facet");
}

IncidencePolytope IncidencePolytope::fromLabeledFacets(int dim, std::vector<std::string> vertexLabels,
                                                       const std::vector<std::vector<std::string>>& facets)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertexLabels.size(); ++i)
        index.emplace(vertexLabels[i], i);
    std::vector<IndexSet> indexed;
    indexed.reserve(facets.size());
    for (const auto& f : facets)
    {
        IndexSet s;
        for (const auto& l : f)
        {
            auto it = index.find(l);
            if (it == index.end())
                throw UnknownVertex("facet mentions unknown vertex \"" + l + "\"");
            s.push_back(it->second);
        }
        indexed.push_back(std::move(s));
    }
    return IncidencePolytope(dim, std::move(vertexLabels), std::move(indexed));
}

std::size_t IncidencePolytope::indexOf(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw UnknownVertex("no vertex labeled \"" + label + "\"");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> IncidencePolytope::findFacet(const IndexSet& vertices) const
{
    IndexSet sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    auto it = std::lower_bound(facets_.begin(), facets_.end(), sorted);
    if (it == facets_.end() || *it != sorted)
        return std::nullopt;
    return static_cast<std::size_t>(it - facets_.begin());
}

bool IncidencePolytope::isSimplicial() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [this](const IndexSet& f) { return f.size() == static_cast<std::size_t>(dim_); });
}

namespace {

void checkVertexPair(const IncidencePolytope& p, std::size_t u, std::size_t v)
{
    if (u >= p.vertexCount() || v >= p.vertexCount())
        throw UnknownVertex("vertex index out of range");
    if (u == v)
        throw BadParameters("a vertex pair needs two distinct vertices");
}

}  // namespace

bool isInnerDiagonal(const IncidencePolytope& p, std::size_t u, std::size_t v)
{
    checkVertexPair(p, u, v);
    return !p.facetsContaining(u).intersects(p.facetsContaining(v));
}

bool isEdge(const IncidencePolytope& p, std::size_t u, std::size_t v)
{
    checkVertexPair(p, u, v);
    const auto common = p.facetsContaining(u) & p.facetsContaining(v);
    if (common.none())
        return false;
    VertexSet face(p.vertexCount());
    face.set();
    for (auto f = common.find_first(); f != common.npos; f = common.find_next(f))
        face &= p.facetSet(f);
    return face.count() == 2;
}

bool isEdge(const IncidencePolytope& p, const std::string& u, const std::string& v)
{
    return isEdge(p, p.indexOf(u), p.indexOf(v));
}

std::vector<DiagonalPair> innerDiagonals(const IncidencePolytope& p)
{
    std::vector<DiagonalPair> out;
    for (std::size_t u = 0; u < p.vertexCount(); ++u)
        for (std::size_t v = u + 1; v < p.vertexCount(); ++v)
            if (isInnerDiagonal(p, u, v))
                out.push_back({u, v});
    return out;
}

IlluminationReport illuminationReport(const IncidencePolytope& p)
{
    const std::size_t n = p.vertexCount();
    IlluminationReport report;
    report.diagonalPartner.resize(n);
    report.missingEdgePartner.resize(n);
    for (std::size_t u = 0; u < n; ++u)
    {
        for (std::size_t v = 0; v < n; ++v)
        {
            if (u == v)
                continue;
            if (!report.diagonalPartner[u] && isInnerDiagonal(p, u, v))
                report.diagonalPartner[u] = v;
            if (!report.missingEdgePartner[u] && !isEdge(p, u, v))
                report.missingEdgePartner[u] = v;
            if (report.diagonalPartner[u] && report.missingEdgePartner[u])
                break;
        }
    }
    report.isIlluminated = std::all_of(report.diagonalPartner.begin(), report.diagonalPartner.end(),
                                       [](const auto& w) { return w.has_value(); });
    report.isUnneighborly = std::all_of(report.missingEdgePartner.begin(), report.missingEdgePartner.end(),
                                        [](const auto& w) { return w.has_value(); });
    return report;
}

bool illuminatesItself(const IncidencePolytope& p, const VertexSet& set)
{
    for (auto u = set.find_first(); u != set.npos; u = set.find_next(u))
    {
        bool lit = false;
        for (auto v = set.find_first(); v != set.npos && !lit; v = set.find_next(v))
            lit = v != u && isInnerDiagonal(p, u, v);
        if (!lit)
            return false;
    }
    return true;
}

IncidencePolytope stackSimplexFacet(const IncidencePolytope& p, const IndexSet& facet, const std::string& apexLabel)
{
    const auto found = p.findFacet(facet);
    if (!found)
        throw NotAFacet("the given vertex set is not a facet");
    const IndexSet& f = p.facets()[*found];
    if (f.size() != static_cast<std::size_t>(p.dim()))
        throw NotASimplexFacet("facet has " + std::to_string(f.size()) + " vertices, expected " +
                               std::to_string(p.dim()));

    auto labels = p.labels();
    if (std::find(labels.begin(), labels.end(), apexLabel) != labels.end())
        throw BadParameters("apex label \"" + apexLabel + "\" already in use");
    const std::size_t apex = labels.size();
    labels.push_back(apexLabel);

    std::vector<IndexSet> facets;
    facets.reserve(p.facetCount() + f.size() - 1);
    for (std::size_t i = 0; i < p.facetCount(); ++i)
        if (i != *found)
            facets.push_back(p.facets()[i]);
    for (auto w : f)
    {
        IndexSet pyramid;
        for (auto x : f)
            if (x != w)
                pyramid.push_back(x);
        pyramid.push_back(apex);
        facets.push_back(std::move(pyramid));
    }
    return IncidencePolytope(p.dim(), std::move(labels), std::move(facets));
}

IncidencePolytope crosspolytope(int d)
{
    if (d < 1)
        throw BadParameters("crosspolytope needs d >= 1");
    if (d > 20)
        throw BadParameters("crosspolytope facet list too large");
    std::vector<std::string> labels;
    for (int i = 1; i <= d; ++i)
    {
        labels.push_back("+" + std::to_string(i));
        labels.push_back("-" + std::to_string(i));
    }
    std::vector<IndexSet> facets;
    for (unsigned long signs = 0; signs < (1ul << d); ++signs)
    {
        IndexSet f;
        for (int i = 0; i < d; ++i)
            f.push_back(static_cast<std::size_t>(2 * i) + ((signs >> i) & 1u));
        facets.push_back(std::move(f));
    }
    return IncidencePolytope(d, std::move(labels), std::move(facets));
}

IncidencePolytope simplexPolytope(int d)
{
    if (d < 1)
        throw BadParameters("simplex needs d >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= d + 1; ++i)
        labels.push_back(std::to_string(i));
    return IncidencePolytope(d, std::move(labels),
                             combinations(static_cast<std::size_t>(d) + 1, static_cast<std::size_t>(d)));
}

namespace {

/// Interior runs of members (not touching vertex 0 or n-1) must have even length.
bool satisfiesEvenness(const IndexSet& s, std::size_t n)
{
    std::size_t k = 0;
    while (k < s.size())
    {
        std::size_t end = k;
        while (end + 1 < s.size() && s[end + 1] == s[end] + 1)
            ++end;
        const bool touchesBoundary = s[k] == 0 || s[end] == n - 1;
        if (!touchesBoundary && (end - k + 1) % 2 == 1)
            return false;
        k = end + 1;
    }
    return true;
}

}  // namespace

IncidencePolytope cyclicPolytope(int d, int n)
{
    if (d < 1 || n < d + 1)
        throw BadParameters("cyclic polytope needs n >= d + 1 >= 2");
    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    std::vector<IndexSet> facets;
    IndexSet s = allIndices(static_cast<std::size_t>(d));
    do
    {
        if (satisfiesEvenness(s, nn))
            facets.push_back(s);
    } while (nextCombination(s, nn));
    return IncidencePolytope(d, std::move(labels), std::move(facets));
}

PointConfiguration momentCurvePoints(int d, int n)
{
    if (d < 1 || n < 1)
        throw BadParameters("moment curve needs d >= 1 and n >= 1");
    MatrixXq pts(d, n);
    std::vector<std::string> labels;
    for (int j = 0; j < n; ++j)
    {
        Rational power = 1;
        for (int i = 0; i < d; ++i)
        {
            power *= j + 1;
            pts(i, j) = power;
        }
        labels.push_back(std::to_string(j + 1));
    }
    return PointConfiguration(d, std::move(pts), std::move(labels));
}

GammaResult gamma(const IncidencePolytope& p, std::size_t cap)
{
    const std::size_t n = p.vertexCount();
    if (n > cap)
        throw TooLargeForBruteForce("gamma is exhaustive; " + std::to_string(n) + " vertices exceed the cap of " +
                                    std::to_string(cap));
    GammaResult best;
    if (!illuminationReport(p).isIlluminated)
        return best;

    for (std::size_t v = 0; v < n; ++v)
    {
        IndexSet partners;
        for (std::size_t w = 0; w < n; ++w)
            if (w != v && isInnerDiagonal(p, v, w))
                partners.push_back(w);
        const std::size_t subsets = std::size_t{1} << partners.size();
        for (std::size_t mask = 1; mask < subsets; ++mask)
        {
            const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
            if (size <= best.value)
                continue;
            VertexSet rest(n);
            rest.set();
            rest.reset(v);
            IndexSet chosen;
            for (std::size_t k = 0; k < partners.size(); ++k)
            {
                if ((mask >> k) & 1u)
                {
                    rest.reset(partners[k]);
                    chosen.push_back(partners[k]);
                }
            }
            if (illuminatesItself(p, rest))
            {
                best.value = size;
                best.vertex = v;
                best.opposite = std::move(chosen);
            }
        }
    }
    return best;
}

MatchingResult innerDiagonalMatching(const IncidencePolytope& p)
{
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const std::size_t n = p.vertexCount();
    Graph g(n);
    for (const auto& d : innerDiagonals(p))
        boost::add_edge(d.u, d.v, g);

    std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(g, &mate[0]);

    MatchingResult result;
    const auto none = boost::graph_traits<Graph>::null_vertex();
    for (std::size_t u = 0; u < n; ++u)
        if (mate[u] != none && u < mate[u])
            result.matching.push_back({u, mate[u]});
    result.hasPerfectMatching = 2 * result.matching.size() == n;
    return result;
}

}  // namespace galepoly
