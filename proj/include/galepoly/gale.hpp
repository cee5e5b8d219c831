#ifndef GALEPOLY_GALE_HPP
#define GALEPOLY_GALE_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "galepoly/configuration.hpp"
#include "galepoly/lp.hpp"
#include "galepoly/parallel.hpp"
#include "galepoly/polytope.hpp"

namespace galepoly {

/// Coface test result: S is a coface iff 0 lies in the relative interior of conv(S).
struct CofaceReport
{
    IndexSet subset;
    bool isCoface = false;
    DependenceCertificate certificate;
};

CofaceReport isCoface(const VectorConfiguration& config, const IndexSet& subset);

/**
 * Inclusion-minimal cofaces, ordered by size then lexicographically. These
 * are the complements of the facets of the polytope the configuration is a
 * Gale diagram of. Subsets larger than `maxSize` are not examined; the
 * default bound m+1 is exact because a minimal positive dependence is
 * supported on a circuit.
 */
std::vector<IndexSet> enumerateFacetComplements(const VectorConfiguration& config, const ExecOptions& exec = {},
                                                std::size_t maxSize = std::numeric_limits<std::size_t>::max());

/// Rows of a kernel basis of [1 | p_i]^T; dimension n - d - 1.
VectorConfiguration galeDual(const PointConfiguration& points);

/**
 * Points in R^{n-m-1} whose Gale dual has the coface structure of `config`.
 * Throws NotTwoSpanning if the configuration is not positively 2-spanning
 * or contains a zero vector.
 */
PointConfiguration realize(const VectorConfiguration& config, const ExecOptions& exec = {});

/// Polytope whose facets are the complements of the minimal cofaces; d = n - m - 1.
IncidencePolytope incidenceFromGale(const VectorConfiguration& config, const ExecOptions& exec = {});

/// Affine hyperplane {x : normal . x = offset}.
struct Hyperplane
{
    VectorXq normal;
    Rational offset;

    template <typename Derived>
    Rational evaluate(const Eigen::MatrixBase<Derived>& x) const
    {
        return normal.dot(x) - offset;
    }
};

/**
 * Hyperplane through the columns listed in `onHyperplane`, oriented so every
 * other column lies strictly below it. nullopt unless the listed points span
 * a hyperplane and all the remaining points are strictly on one side.
 */
std::optional<Hyperplane> supportingHyperplane(const MatrixXq& points, const IndexSet& onHyperplane);

}  // namespace galepoly

#endif  // GALEPOLY_GALE_HPP
