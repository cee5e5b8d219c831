#include "galepoly/configuration.hpp"

#include <algorithm>
#include <set>

#include "galepoly/errors.hpp"

namespace galepoly {

IndexSet allIndices(std::size_t n)
{
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = i;
    return s;
}

IndexSet complementOf(const IndexSet& s, std::size_t n)
{
    IndexSet out;
    out.reserve(n >= s.size() ? n - s.size() : 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (k < s.size() && s[k] == i)
        {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

void validateIndexSet(const IndexSet& s, std::size_t n)
{
    for (std::size_t k = 0; k < s.size(); ++k)
    {
        if (s[k] >= n)
            throw BadParameters("index " + std::to_string(s[k]) + " out of range for " + std::to_string(n) +
                                " members");
        if (k > 0 && s[k - 1] >= s[k])
            throw BadParameters("index set must be strictly increasing");
    }
}

bool nextCombination(IndexSet& s, std::size_t n)
{
    const std::size_t r = s.size();
    for (std::size_t k = r; k-- > 0;)
    {
        if (s[k] < n - r + k)
        {
            ++s[k];
            for (std::size_t j = k + 1; j < r; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<IndexSet> combinations(std::size_t n, std::size_t r)
{
    std::vector<IndexSet> out;
    if (r > n)
        return out;
    IndexSet s = allIndices(r);
    do
        out.push_back(s);
    while (nextCombination(s, n));
    return out;
}

namespace {

void checkLabels(const std::vector<std::string>& labels, Eigen::Index columns)
{
    if (static_cast<Eigen::Index>(labels.size()) != columns)
        throw DimensionMismatch("label count does not match column count");
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw BadParameters("duplicate label \"" + l + "\"");
}

std::size_t findLabel(const std::vector<std::string>& labels, const std::string& label)
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw UnknownVertex("no member labeled \"" + label + "\"");
    return static_cast<std::size_t>(it - labels.begin());
}

MatrixXq selectColumns(const MatrixXq& m, const IndexSet& s)
{
    MatrixXq out(m.rows(), static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k)
        out.col(static_cast<Eigen::Index>(k)) = m.col(static_cast<Eigen::Index>(s[k]));
    return out;
}

}  // namespace

VectorConfiguration::VectorConfiguration(Eigen::Index dim, MatrixXq vectors, std::vector<std::string> labels)
    : dim_(dim), vectors_(std::move(vectors)), labels_(std::move(labels))
{
    if (vectors_.rows() != dim_)
        throw DimensionMismatch("vector length " + std::to_string(vectors_.rows()) + " differs from m = " +
                                std::to_string(dim_));
    checkLabels(labels_, vectors_.cols());
}

MatrixXq VectorConfiguration::columns(const IndexSet& s) const
{
    validateIndexSet(s, size());
    return selectColumns(vectors_, s);
}

VectorConfiguration VectorConfiguration::subconfiguration(const IndexSet& s) const
{
    return VectorConfiguration(dim_, columns(s), labelsOf(s));
}

VectorConfiguration VectorConfiguration::without(const IndexSet& removed) const
{
    validateIndexSet(removed, size());
    return subconfiguration(complementOf(removed, size()));
}

std::size_t VectorConfiguration::indexOf(const std::string& label) const
{
    return findLabel(labels_, label);
}

IndexSet VectorConfiguration::indicesOf(const std::vector<std::string>& labels) const
{
    IndexSet s;
    for (const auto& l : labels)
        s.push_back(indexOf(l));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::vector<std::string> VectorConfiguration::labelsOf(const IndexSet& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto i : s)
        out.push_back(labels_.at(i));
    return out;
}

PointConfiguration::PointConfiguration(Eigen::Index dim, MatrixXq points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels))
{
    if (points_.rows() != dim_)
        throw DimensionMismatch("point length " + std::to_string(points_.rows()) + " differs from d = " +
                                std::to_string(dim_));
    checkLabels(labels_, points_.cols());
}

MatrixXq PointConfiguration::columns(const IndexSet& s) const
{
    validateIndexSet(s, size());
    return selectColumns(points_, s);
}

PointConfiguration PointConfiguration::withPoint(const VectorXq& x, std::string label) const
{
    if (x.size() != dim_)
        throw DimensionMismatch("new point has wrong length");
    MatrixXq grown(dim_, points_.cols() + 1);
    grown.leftCols(points_.cols()) = points_;
    grown.col(points_.cols()) = x;
    auto labels = labels_;
    labels.push_back(std::move(label));
    return PointConfiguration(dim_, std::move(grown), std::move(labels));
}

std::size_t PointConfiguration::indexOf(const std::string& label) const
{
    return findLabel(labels_, label);
}

MatrixXq liftedMatrix(const PointConfiguration& points)
{
    MatrixXq lifted(static_cast<Eigen::Index>(points.size()), points.dim() + 1);
    for (Eigen::Index i = 0; i < lifted.rows(); ++i)
    {
        lifted(i, 0) = 1;
        lifted.row(i).tail(points.dim()) = points.matrix().col(i).transpose();
    }
    return lifted;
}

}  // namespace galepoly
