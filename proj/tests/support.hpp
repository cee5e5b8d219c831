#ifndef GALEPOLY_TESTS_SUPPORT_HPP
#define GALEPOLY_TESTS_SUPPORT_HPP

// Fixtures and independent oracles shared by the test executables. The oracles
// deliberately avoid the simplex code: feasibility is decided by enumerating
// basic solutions with plain linear solves.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galepoly/configuration.hpp"
#include "galepoly/linalg.hpp"
#include "galepoly/polytope.hpp"

namespace testsupport {

using namespace galepoly;

inline Rational q(const char* text)
{
    return parseRational(text);
}

/// Each inner list is one column.
inline MatrixXq cols(std::initializer_list<std::initializer_list<long>> columns)
{
    const auto rows = static_cast<Eigen::Index>(columns.begin()->size());
    MatrixXq m(rows, static_cast<Eigen::Index>(columns.size()));
    Eigen::Index c = 0;
    for (const auto& column : columns)
    {
        Eigen::Index r = 0;
        for (long v : column)
            m(r++, c) = Rational(v);
        ++c;
    }
    return m;
}

inline VectorXq vec(std::initializer_list<long> entries)
{
    VectorXq v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries)
        v(i++) = Rational(e);
    return v;
}

inline std::vector<std::string> numberedLabels(std::size_t n, const std::string& prefix = "u")
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(prefix + std::to_string(i));
    return labels;
}

inline VectorConfiguration configOf(const MatrixXq& m)
{
    return VectorConfiguration(m.rows(), m, numberedLabels(static_cast<std::size_t>(m.cols())));
}

inline PointConfiguration pointsOf(const MatrixXq& m)
{
    return PointConfiguration(m.rows(), m, numberedLabels(static_cast<std::size_t>(m.cols()), "p"));
}

/// Square (1,1), (-1,1), (-1,-1), (1,-1) in counterclockwise order.
inline PointConfiguration square()
{
    return pointsOf(cols({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
}

/// Triangular bipyramid: apexes "n", "s" over the triangle "a", "b", "c".
inline IncidencePolytope triangularBipyramid()
{
    return IncidencePolytope::fromLabeledFacets(
        3, {"a", "b", "c", "n", "s"},
        {{"a", "b", "n"}, {"b", "c", "n"}, {"a", "c", "n"}, {"a", "b", "s"}, {"b", "c", "s"}, {"a", "c", "s"}});
}

inline IncidencePolytope squarePolytope()
{
    return IncidencePolytope::fromLabeledFacets(2, {"p0", "p1", "p2", "p3"},
                                                {{"p0", "p1"}, {"p1", "p2"}, {"p2", "p3"}, {"p0", "p3"}});
}

/**
 * Feasibility of {x >= 0 : Ax = b} by enumerating column subsets and solving
 * each restricted system exactly. Some basic feasible solution exists whenever
 * the system is feasible, and basic solutions use linearly independent
 * columns, so subsets up to rank(A) suffice.
 */
inline std::optional<VectorXq> oracleNonnegativeSolution(const MatrixXq& a, const VectorXq& b)
{
    const auto n = static_cast<std::size_t>(a.cols());
    if (isZero(b))
        return VectorXq::Zero(a.cols()).eval();
    const auto r = static_cast<std::size_t>(rank(a));
    for (std::size_t size = 1; size <= std::min(r, n); ++size)
    {
        for (const auto& subset : combinations(n, size))
        {
            MatrixXq restricted(a.rows(), static_cast<Eigen::Index>(size));
            for (std::size_t j = 0; j < size; ++j)
                restricted.col(static_cast<Eigen::Index>(j)) = a.col(static_cast<Eigen::Index>(subset[j]));
            if (rank(restricted) != static_cast<Eigen::Index>(size))
                continue;
            const auto x = solveLinear(restricted, b);
            if (!x)
                continue;
            bool nonnegative = true;
            for (Eigen::Index j = 0; j < x->size(); ++j)
                nonnegative = nonnegative && (*x)(j) >= 0;
            if (!nonnegative)
                continue;
            VectorXq full = VectorXq::Zero(a.cols());
            for (std::size_t j = 0; j < size; ++j)
                full(static_cast<Eigen::Index>(subset[j])) = (*x)(static_cast<Eigen::Index>(j));
            return full;
        }
    }
    return std::nullopt;
}

/// A strictly positive dependence exists iff for each i some nonnegative dependence has lambda_i = 1.
inline bool oracleStrictlyPositiveDependence(const MatrixXq& u)
{
    for (Eigen::Index i = 0; i < u.cols(); ++i)
    {
        MatrixXq a(u.rows() + 1, u.cols());
        a.topRows(u.rows()) = u;
        a.row(u.rows()).setZero();
        a(u.rows(), i) = 1;
        VectorXq b = VectorXq::Zero(u.rows() + 1);
        b(u.rows()) = 1;
        if (!oracleNonnegativeSolution(a, b))
            return false;
    }
    return true;
}

/// Definitional positive spanning: every +-e_j is a nonnegative combination.
inline bool oraclePositivelySpans(const MatrixXq& u)
{
    for (Eigen::Index j = 0; j < u.rows(); ++j)
    {
        for (int sign : {1, -1})
        {
            VectorXq e = VectorXq::Zero(u.rows());
            e(j) = sign;
            if (!oracleNonnegativeSolution(u, e))
                return false;
        }
    }
    return true;
}

/// All inclusion-minimal cofaces by scanning every nonempty subset, smallest first.
inline std::vector<IndexSet> oracleMinimalCofaces(const VectorConfiguration& config)
{
    std::vector<IndexSet> found;
    const std::size_t n = config.size();
    for (std::size_t size = 1; size <= n; ++size)
    {
        for (const auto& subset : combinations(n, size))
        {
            const bool hasFoundSubset = std::any_of(found.begin(), found.end(), [&](const IndexSet& f) {
                return std::includes(subset.begin(), subset.end(), f.begin(), f.end());
            });
            if (hasFoundSubset)
                continue;
            if (config.dim() == 0 ? size == 1 : oracleStrictlyPositiveDependence(config.columns(subset)))
                found.push_back(subset);
        }
    }
    return found;
}

inline std::set<std::vector<std::string>> asLabelSets(const std::vector<IndexSet>& sets,
                                                      const std::vector<std::string>& labels)
{
    std::set<std::vector<std::string>> out;
    for (const auto& s : sets)
    {
        std::vector<std::string> named;
        for (auto i : s)
            named.push_back(labels.at(i));
        std::sort(named.begin(), named.end());
        out.insert(named);
    }
    return out;
}

/**
 * Facets of conv(points) for full-dimensional points in convex position: every
 * d-subset spanning an affine hyperplane with all points weakly on one side
 * contributes the set of points on that hyperplane.
 */
inline std::vector<IndexSet> oracleFacets(const MatrixXq& points)
{
    const Eigen::Index d = points.rows();
    const auto n = static_cast<std::size_t>(points.cols());
    std::set<IndexSet> facets;
    for (const auto& subset : combinations(n, static_cast<std::size_t>(d)))
    {
        // Hyperplane a.x = c through the subset: kernel of rows [p^T, -1].
        MatrixXq system(d, d + 1);
        for (Eigen::Index r = 0; r < d; ++r)
        {
            system.row(r).head(d) = points.col(static_cast<Eigen::Index>(subset[static_cast<std::size_t>(r)])).transpose();
            system(r, d) = -1;
        }
        const MatrixXq kernel = kernelBasis(system);
        if (kernel.cols() != 1)
            continue;
        const VectorXq normal = kernel.col(0).head(d);
        if (isZero(normal))
            continue;
        const Rational offset = kernel(d, 0);
        int above = 0;
        int below = 0;
        IndexSet on;
        for (std::size_t i = 0; i < n; ++i)
        {
            const Rational value = normal.dot(points.col(static_cast<Eigen::Index>(i))) - offset;
            if (value > 0)
                ++above;
            else if (value < 0)
                ++below;
            else
                on.push_back(i);
        }
        if (above == 0 || below == 0)
            facets.insert(on);
    }
    return {facets.begin(), facets.end()};
}

inline IncidencePolytope oraclePolytope(const PointConfiguration& points)
{
    return IncidencePolytope(static_cast<int>(points.dim()), points.labels(), oracleFacets(points.matrix()));
}

/// p(d) and the two closed forms of M(d), in floating point.
inline int floatBlockParameter(int d)
{
    return static_cast<int>(std::ceil((std::sqrt(4.0 * d + 1.0) - 1.0) / 2.0));
}

inline long long floatLinearForm(long long d)
{
    return d + 1 + static_cast<long long>(std::ceil(2.0 * std::sqrt(static_cast<double>(d))));
}

inline long long floatSquareForm(long long d)
{
    const double root = std::sqrt(static_cast<double>(d)) + 1.0;
    return static_cast<long long>(std::ceil(root * root - 1e-9));
}

inline MatrixXq randomIntegerMatrix(std::mt19937& rng, Eigen::Index rows, Eigen::Index columns, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    MatrixXq m(rows, columns);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < columns; ++c)
            m(r, c) = dist(rng);
    return m;
}

}  // namespace testsupport

#endif  // GALEPOLY_TESTS_SUPPORT_HPP
