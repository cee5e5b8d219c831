#ifndef GALEPOLY_CONFIGURATION_HPP
#define GALEPOLY_CONFIGURATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "galepoly/linalg.hpp"

namespace galepoly {

/// Sorted, duplicate-free list of member indices.
using IndexSet = std::vector<std::size_t>;

IndexSet allIndices(std::size_t n);
IndexSet complementOf(const IndexSet& s, std::size_t n);
/// Throws BadParameters unless s is strictly increasing with every entry < n.
void validateIndexSet(const IndexSet& s, std::size_t n);

/// Advances s to the next r-subset of [0, n) in lexicographic order; false after the last one.
bool nextCombination(IndexSet& s, std::size_t n);
/// All r-subsets of [0, n), lexicographic.
std::vector<IndexSet> combinations(std::size_t n, std::size_t r);

/**
 * Ordered, labeled multiset of vectors in R^m. Stored column-wise: column i
 * of matrix() is the i-th vector. Duplicate coordinates are separate members.
 */
class VectorConfiguration
{
    public:
        VectorConfiguration() = default;
        VectorConfiguration(Eigen::Index dim, MatrixXq vectors, std::vector<std::string> labels);

        Eigen::Index dim() const { return dim_; }
        std::size_t size() const { return labels_.size(); }

        const MatrixXq& matrix() const { return vectors_; }
        auto vector(std::size_t i) const { return vectors_.col(static_cast<Eigen::Index>(i)); }
        const std::string& label(std::size_t i) const { return labels_[i]; }
        const std::vector<std::string>& labels() const { return labels_; }

        /// Columns for the given members, in index-set order.
        MatrixXq columns(const IndexSet& s) const;
        VectorConfiguration subconfiguration(const IndexSet& s) const;
        VectorConfiguration without(const IndexSet& removed) const;

        std::size_t indexOf(const std::string& label) const;
        IndexSet indicesOf(const std::vector<std::string>& labels) const;
        std::vector<std::string> labelsOf(const IndexSet& s) const;

    private:
        Eigen::Index dim_ = 0;
        MatrixXq vectors_;
        std::vector<std::string> labels_;
};

/// Labeled points in R^d, stored column-wise like VectorConfiguration.
class PointConfiguration
{
    public:
        PointConfiguration() = default;
        PointConfiguration(Eigen::Index dim, MatrixXq points, std::vector<std::string> labels);

        Eigen::Index dim() const { return dim_; }
        std::size_t size() const { return labels_.size(); }

        const MatrixXq& matrix() const { return points_; }
        auto point(std::size_t i) const { return points_.col(static_cast<Eigen::Index>(i)); }
        const std::string& label(std::size_t i) const { return labels_[i]; }
        const std::vector<std::string>& labels() const { return labels_; }

        MatrixXq columns(const IndexSet& s) const;
        PointConfiguration withPoint(const VectorXq& x, std::string label) const;
        std::size_t indexOf(const std::string& label) const;

    private:
        Eigen::Index dim_ = 0;
        MatrixXq points_;
        std::vector<std::string> labels_;
};

/// Rows [1 | p_i]: the homogenized point matrix, n x (d+1).
MatrixXq liftedMatrix(const PointConfiguration& points);

}  // namespace galepoly

#endif  // GALEPOLY_CONFIGURATION_HPP
