#ifndef GALEPOLY_MANI_HPP
#define GALEPOLY_MANI_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "galepoly/configuration.hpp"
#include "galepoly/parallel.hpp"
#include "galepoly/polytope.hpp"
#include "galepoly/spanning.hpp"

namespace galepoly {

/// Smallest c >= 0 with c * c >= n.
long long ceilSqrt(long long n);

/// p(d): smallest p >= 1 with p (p + 1) >= d, i.e. ceil((sqrt(4d + 1) - 1) / 2).
int blockParameter(int d);

/// d + 1 + ceil(2 sqrt(d)).
long long mcmullenLinearForm(long long d);
/// ceil((sqrt(d) + 1)^2), found by integer search.
long long mcmullenSquareForm(long long d);

struct FormulaTableRow
{
    int d = 0;
    int p = 0;
    int q = 0;
    int nu = 0;
    int M = 0;
};

/// p(d), q = ceil(d / p), nu = d + p + q + 1 and M = min(2d, nu); cross-checked against both closed forms.
FormulaTableRow formulas(int d);

/**
 * Gale diagram A of the nonsimplicial building block Q together with the
 * designated facet complements B_1..B_l, B~_1..B~_{q-l}, B'.
 */
struct ManiPlan
{
    int d = 0;
    int p = 0;
    int q = 0;
    int ell = 0;
    VectorConfiguration configuration;
    std::vector<std::string> complementNames;
    std::vector<IndexSet> designatedComplements;
};

/// Vectors in R^{p-1}: l copies of B = {-1, e_1, ..., e_{p-1}}, q - l copies of -B, then 1, -e_1, ..., -e_{d+p-pq-1}.
ManiPlan buildA(int d, int p, int ell);

enum class BuildMode
{
    Full,
    Certificate,
};

struct ManiOptions
{
    std::optional<int> ell;
    std::optional<int> p;
    BuildMode mode = BuildMode::Full;
    /// Full mode: realize A, stack geometrically and compare every vertex pair against the incidences.
    bool geometricCrossCheck = false;
    ExecOptions exec;
};

struct CheckRecord
{
    std::string name;
    bool passed = false;
    nlohmann::json certificate;
};

struct ManiConstruction
{
    ManiPlan plan;
    FormulaTableRow formula;
    BuildMode mode = BuildMode::Full;
    bool defaultParameters = true;
    std::size_t f0 = 0;
    bool illuminated = false;
    bool unneighborly = false;
    bool nonsimplicial = false;
    std::vector<std::string> apexLabels;
    std::optional<IncidencePolytope> q;
    std::optional<IncidencePolytope> p;
    std::optional<PointConfiguration> realizedQ;
    std::optional<PointConfiguration> realizedP;
    std::vector<CheckRecord> checks;
};

/**
 * Builds Q from A and stacks onto the q + 1 designated simplex facets.
 * Defaults: p = p(d) (p = 3 when d = 6), l = 1. Throws CertificateFailure on
 * the first check that does not hold.
 */
ManiConstruction constructNonsimplicialMani(int d, const ManiOptions& options = {});

struct StackPoint
{
    VectorXq point;
    Rational epsilon;
    int halvings = 0;
};

/**
 * Apex for stacking onto the simplex facet `facet` of conv(points):
 * barycenter + epsilon * outward normal, with epsilon halved from 1 until the
 * apex is beyond that facet only, every old point stays a vertex and each
 * segment from the apex to a vertex off the facet has an interior midpoint.
 */
StackPoint geometricStackPoint(const PointConfiguration& points, const IndexSet& facet, const ExecOptions& exec = {},
                               int maxHalvings = 64);

struct SimplicialManiResult
{
    FormulaTableRow formula;
    IncidencePolytope cyclic;
    std::vector<IndexSet> stackedFacets;
    IncidencePolytope polytope;
    bool illuminated = false;
    bool simplicial = false;
    bool isManiPolytope = false;
};

/// Cyclic d-polytope on d + p(d) vertices stacked onto q + 1 facets whose complements cover every vertex.
SimplicialManiResult maniSimplicial(int d);

struct MarcusReport
{
    ManiConstruction construction;
    VectorConfiguration dual;
    int k = 2;
    MinimalityVerdict minimality;
    std::size_t conjecturedBound = 0;
    bool refutesBound = false;
};

/// Certificate-mode construction in dimension d, Gale dual of the realized polytope and its minimality scan.
MarcusReport unneighborlyDualPipeline(int d, const ExecOptions& exec = {});
/// The d = 36 instance: 49 vectors in R^12 against the bound 2km = 48.
MarcusReport marcusCounterexample(const ExecOptions& exec = {});

}  // namespace galepoly

#endif  // GALEPOLY_MANI_HPP
