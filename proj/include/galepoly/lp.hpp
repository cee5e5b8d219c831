#ifndef GALEPOLY_LP_HPP
#define GALEPOLY_LP_HPP

#include <optional>
#include <string>
#include <vector>

#include "galepoly/configuration.hpp"
#include "galepoly/linalg.hpp"

namespace galepoly {

/**
 * Outcome of a phase-1 feasibility problem {x >= 0 : Ax = b}.
 *
 * When feasible, `solution` holds a basic feasible point. Otherwise `farkas`
 * holds y with y^T A <= 0 componentwise and y^T b > 0.
 */
struct FeasibilityResult
{
    bool feasible = false;
    VectorXq solution;
    VectorXq farkas;
};

/// Exact phase-1 simplex with Bland's least-index rule. The result is re-verified before return.
FeasibilityResult solveNonnegative(const MatrixXq& a, const VectorXq& b);

enum class CertificateKind
{
    PositiveDependence,
    StiemkeWitness,
    RankDeficiency,
};

std::string toString(CertificateKind kind);

/**
 * Witness for the presence or absence of a strictly positive linear dependence.
 *
 *  - PositiveDependence: lambda_i >= 1 and sum lambda_i u_i = 0.
 *  - StiemkeWitness: <c, u_i> >= 0 for every i, strictly for at least one.
 *  - RankDeficiency: a nonzero direction orthogonal to every u_i.
 */
struct DependenceCertificate
{
    CertificateKind kind = CertificateKind::PositiveDependence;
    std::vector<Rational> lambda;
    std::optional<VectorXq> functional;
    std::optional<VectorXq> deficientDirection;
};

/// Re-checks the certificate against the column vectors it was issued for.
bool verifyCertificate(const MatrixXq& vectors, const DependenceCertificate& cert);

/// PositiveDependence iff some lambda > 0 has vectors * lambda = 0; else a Stiemke witness.
DependenceCertificate strictPositiveDependence(const MatrixXq& vectors);
DependenceCertificate strictPositiveDependence(const VectorConfiguration& config, const IndexSet& selection);

struct SpanResult
{
    bool spans = false;
    DependenceCertificate certificate;
};

/// Columns positively span R^rows: full row rank plus a strictly positive dependence.
SpanResult positivelySpans(const MatrixXq& vectors);
SpanResult positivelySpans(const VectorConfiguration& config, const IndexSet& selection);

/// x lies in the interior of conv(points) iff {p - x} positively spans R^d.
SpanResult interiorPointTest(const PointConfiguration& points, const VectorXq& x);
SpanResult interiorPointTest(const MatrixXq& points, const VectorXq& x);

/// v is a nonnegative combination of the columns.
bool isNonnegativeCombination(const MatrixXq& vectors, const VectorXq& v);

/// x is a convex combination of the columns.
bool inConvexHull(const MatrixXq& points, const VectorXq& x);

/// Column i is not a convex combination of the other columns.
bool isVertex(const MatrixXq& points, Eigen::Index i);

}  // namespace galepoly

#endif  // GALEPOLY_LP_HPP
