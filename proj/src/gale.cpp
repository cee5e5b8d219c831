#include "galepoly/gale.hpp"

#include <stdexcept>

#include "galepoly/errors.hpp"
#include "galepoly/spanning.hpp"

namespace galepoly {

CofaceReport isCoface(const VectorConfiguration& config, const IndexSet& subset)
{
    if (subset.empty())
        throw EmptySelection("coface test needs a nonempty subset");
    CofaceReport report;
    report.subset = subset;
    report.certificate = strictPositiveDependence(config, subset);
    report.isCoface = report.certificate.kind == CertificateKind::PositiveDependence;
    return report;
}

std::vector<IndexSet> enumerateFacetComplements(const VectorConfiguration& config, const ExecOptions& exec,
                                                std::size_t maxSize)
{
    const std::size_t n = config.size();
    const auto caratheodory = static_cast<std::size_t>(config.dim()) + 1;
    const std::size_t bound = std::min(n, maxSize == std::numeric_limits<std::size_t>::max() ? caratheodory : maxSize);

    std::vector<IndexSet> found;
    std::vector<VertexSet> foundSets;
    for (std::size_t size = 1; size <= bound; ++size)
    {
        std::vector<IndexSet> candidates;
        IndexSet s = allIndices(size);
        do
        {
            VertexSet bits(n);
            for (auto i : s)
                bits.set(i);
            const bool dominated = std::any_of(foundSets.begin(), foundSets.end(),
                                               [&](const VertexSet& f) { return f.is_subset_of(bits); });
            if (!dominated)
                candidates.push_back(s);
        } while (nextCombination(s, n));

        // A minimal positive dependence has a one-dimensional kernel, so rank = size - 1.
        const auto verdicts = parallelMap(candidates.size(), exec, [&](std::size_t c) {
            const MatrixXq cols = config.columns(candidates[c]);
            if (rank(cols) + 1 != static_cast<Eigen::Index>(size))
                return false;
            return strictPositiveDependence(cols).kind == CertificateKind::PositiveDependence;
        });
        for (std::size_t c = 0; c < candidates.size(); ++c)
        {
            if (!verdicts[c])
                continue;
            if (size > caratheodory)
                throw std::logic_error("minimal coface larger than m + 1");
            VertexSet bits(n);
            for (auto i : candidates[c])
                bits.set(i);
            foundSets.push_back(std::move(bits));
            found.push_back(candidates[c]);
        }
    }
    return found;
}

VectorConfiguration galeDual(const PointConfiguration& points)
{
    const MatrixXq lifted = liftedMatrix(points);
    if (rank(lifted) != points.dim() + 1)
        throw DegenerateInput("points do not affinely span R^" + std::to_string(points.dim()));
    const MatrixXq liftedT = lifted.transpose();
    const MatrixXq kernel = kernelBasis(liftedT);
    return VectorConfiguration(kernel.cols(), kernel.transpose(), points.labels());
}

PointConfiguration realize(const VectorConfiguration& config, const ExecOptions& exec)
{
    const std::size_t n = config.size();
    for (std::size_t i = 0; i < n; ++i)
        if (isZero(config.vector(i)))
            throw NotTwoSpanning("member \"" + config.label(i) + "\" is the zero vector");
    const auto spanning = isPositivelyKSpanning(config, 2, exec);
    if (!spanning.holds)
    {
        std::string witness;
        for (auto i : spanning.deleted)
            witness += (witness.empty() ? "" : ",") + config.label(i);
        throw NotTwoSpanning("deleting {" + witness + "} leaves a configuration that does not positively span");
    }

    const auto dependence = strictPositiveDependence(config.matrix());
    VectorXq lambda(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        lambda(static_cast<Eigen::Index>(i)) = dependence.lambda[i];

    const MatrixXq kernel = kernelBasis(config.matrix());
    MatrixXq basis(static_cast<Eigen::Index>(n), kernel.cols());
    basis.col(0) = lambda;
    Eigen::Index filled = 1;
    for (Eigen::Index c = 0; c < kernel.cols() && filled < basis.cols(); ++c)
    {
        basis.col(filled) = kernel.col(c);
        if (rank(basis.leftCols(filled + 1)) == filled + 1)
            ++filled;
    }
    if (filled != basis.cols())
        throw std::logic_error("failed to extend the positive dependence to a kernel basis");

    const Eigen::Index d = basis.cols() - 1;
    MatrixXq points(d, static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i)
    {
        const Rational inv = 1 / lambda(i);
        for (Eigen::Index j = 0; j < d; ++j)
            points(j, i) = basis(i, j + 1) * inv;
    }
    return PointConfiguration(d, std::move(points), config.labels());
}

IncidencePolytope incidenceFromGale(const VectorConfiguration& config, const ExecOptions& exec)
{
    const auto spanning = isPositivelyKSpanning(config, 2, exec);
    if (!spanning.holds)
        throw NotTwoSpanning("configuration is not positively 2-spanning");
    const std::size_t n = config.size();
    const auto complements = enumerateFacetComplements(config, exec);
    std::vector<IndexSet> facets;
    facets.reserve(complements.size());
    for (const auto& c : complements)
        facets.push_back(complementOf(c, n));
    const auto d = static_cast<int>(n) - static_cast<int>(config.dim()) - 1;
    return IncidencePolytope(d, config.labels(), std::move(facets));
}

std::optional<Hyperplane> supportingHyperplane(const MatrixXq& points, const IndexSet& onHyperplane)
{
    const Eigen::Index d = points.rows();
    validateIndexSet(onHyperplane, static_cast<std::size_t>(points.cols()));
    MatrixXq system(static_cast<Eigen::Index>(onHyperplane.size()), d + 1);
    for (std::size_t k = 0; k < onHyperplane.size(); ++k)
    {
        const auto row = static_cast<Eigen::Index>(k);
        system.row(row).head(d) = points.col(static_cast<Eigen::Index>(onHyperplane[k])).transpose();
        system(row, d) = -1;
    }
    const MatrixXq kernel = kernelBasis(system);
    if (kernel.cols() != 1)
        return std::nullopt;

    Hyperplane h{kernel.col(0).head(d), kernel(d, 0)};
    if (isZero(h.normal))
        return std::nullopt;

    const IndexSet others = complementOf(onHyperplane, static_cast<std::size_t>(points.cols()));
    int side = 0;
    for (auto j : others)
    {
        const Rational value = h.evaluate(points.col(static_cast<Eigen::Index>(j)));
        const int s = value > 0 ? 1 : (value < 0 ? -1 : 0);
        if (s == 0 || (side != 0 && s != side))
            return std::nullopt;
        side = s;
    }
    if (side > 0)
    {
        h.normal = -h.normal;
        h.offset = -h.offset;
    }
    return h;
}

}  // namespace galepoly
