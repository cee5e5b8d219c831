#ifndef GALEPOLY_POLYTOPE_HPP
#define GALEPOLY_POLYTOPE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "galepoly/configuration.hpp"

namespace galepoly {

using VertexSet = boost::dynamic_bitset<>;

/**
 * Combinatorial polytope given by its vertex-facet incidences.
 *
 * Facets are stored as sorted vertex-index lists and the facet list itself is
 * sorted, so two polytopes built from the same incidences compare equal
 * regardless of input order. The facet list is assumed complete.
 */
class IncidencePolytope
{
    public:
        IncidencePolytope(int dim, std::vector<std::string> vertexLabels, std::vector<IndexSet> facets);

        static IncidencePolytope fromLabeledFacets(int dim, std::vector<std::string> vertexLabels,
                                                   const std::vector<std::vector<std::string>>& facets);

        int dim() const { return dim_; }
        std::size_t vertexCount() const { return labels_.size(); }
        std::size_t facetCount() const { return facets_.size(); }

        const std::vector<std::string>& labels() const { return labels_; }
        const std::string& label(std::size_t v) const { return labels_.at(v); }
        std::size_t indexOf(const std::string& label) const;

        const std::vector<IndexSet>& facets() const { return facets_; }
        const VertexSet& facetSet(std::size_t f) const { return facetSets_[f]; }
        /// Bitset over facets: which facets contain vertex v.
        const boost::dynamic_bitset<>& facetsContaining(std::size_t v) const { return incidence_[v]; }

        std::optional<std::size_t> findFacet(const IndexSet& vertices) const;
        bool isSimplicial() const;

        bool operator==(const IncidencePolytope& other) const
        {
            return dim_ == other.dim_ && labels_ == other.labels_ && facets_ == other.facets_;
        }

    private:
        int dim_;
        std::vector<std::string> labels_;
        std::vector<IndexSet> facets_;
        std::vector<VertexSet> facetSets_;
        std::vector<boost::dynamic_bitset<>> incidence_;
};

/// Vertex pair (u < v) contained in no common facet.
struct DiagonalPair
{
    std::size_t u = 0;
    std::size_t v = 0;

    bool operator==(const DiagonalPair&) const = default;
};

/// {u, v} is a 1-face: the facets containing both intersect in exactly {u, v}.
bool isEdge(const IncidencePolytope& p, std::size_t u, std::size_t v);
bool isEdge(const IncidencePolytope& p, const std::string& u, const std::string& v);

bool isInnerDiagonal(const IncidencePolytope& p, std::size_t u, std::size_t v);
std::vector<DiagonalPair> innerDiagonals(const IncidencePolytope& p);

struct IlluminationReport
{
    bool isIlluminated = false;
    bool isUnneighborly = false;
    /// Least inner-diagonal partner of each vertex, if any.
    std::vector<std::optional<std::size_t>> diagonalPartner;
    /// Least vertex not joined to it by an edge, if any.
    std::vector<std::optional<std::size_t>> missingEdgePartner;
};

IlluminationReport illuminationReport(const IncidencePolytope& p);

/// Every member of `set` has an inner-diagonal partner inside `set`.
bool illuminatesItself(const IncidencePolytope& p, const VertexSet& set);

/**
 * Combinatorial stacking onto a simplex facet: `facet` is replaced by the d
 * facets (facet \ {w}) + {apex}.
 */
IncidencePolytope stackSimplexFacet(const IncidencePolytope& p, const IndexSet& facet, const std::string& apexLabel);

/// Vertices "+i" and "-i"; facets are the 2^d sign choices.
IncidencePolytope crosspolytope(int d);
/// Vertices "1" .. "d+1"; every d-subset is a facet.
IncidencePolytope simplexPolytope(int d);
/// Vertices "1" .. "n" along the moment curve; facets from Gale's evenness condition.
IncidencePolytope cyclicPolytope(int d, int n);
/// Moment-curve coordinates (t, t^2, ..., t^d) at t = 1 .. n, labeled like cyclicPolytope.
PointConfiguration momentCurvePoints(int d, int n);

struct GammaResult
{
    std::size_t value = 0;
    std::optional<std::size_t> vertex;
    IndexSet opposite;
};

/**
 * Largest W lying opposite some vertex v: every [v, w] is an inner diagonal
 * and the vertices outside W + {v} illuminate themselves. Exhaustive; throws
 * TooLargeForBruteForce above `cap` vertices.
 */
GammaResult gamma(const IncidencePolytope& p, std::size_t cap = 14);

struct MatchingResult
{
    bool hasPerfectMatching = false;
    std::vector<DiagonalPair> matching;
};

/// Maximum matching in the inner-diagonal graph.
MatchingResult innerDiagonalMatching(const IncidencePolytope& p);

}  // namespace galepoly

#endif  // GALEPOLY_POLYTOPE_HPP
