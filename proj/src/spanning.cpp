#include "galepoly/spanning.hpp"

#include <algorithm>

#include "galepoly/errors.hpp"

namespace galepoly {

KSpanningVerdict isPositivelyKSpanning(const VectorConfiguration& config, int k, const ExecOptions& exec)
{
    if (k < 1)
        throw BadParameters("k must be at least 1");
    const std::size_t n = config.size();
    const auto deletions = static_cast<std::size_t>(k - 1);

    KSpanningVerdict verdict;
    if (deletions >= n)
    {
        verdict.holds = false;
        verdict.deleted = allIndices(n);
        if (config.dim() > 0)
        {
            DependenceCertificate cert;
            cert.kind = CertificateKind::RankDeficiency;
            VectorXq e = VectorXq::Zero(config.dim());
            e(0) = 1;
            cert.deficientDirection = e;
            verdict.certificate = cert;
        }
        return verdict;
    }

    const auto subsets = combinations(n, deletions);
    const auto failing = firstIndexWhere(subsets.size(), exec, [&](std::size_t i) {
        return !positivelySpans(config.columns(complementOf(subsets[i], n))).spans;
    });
    if (!failing)
    {
        verdict.holds = true;
        return verdict;
    }
    verdict.deleted = subsets[*failing];
    verdict.certificate = positivelySpans(config.columns(complementOf(verdict.deleted, n))).certificate;
    return verdict;
}

MinimalityVerdict isMinimalKSpanning(const VectorConfiguration& config, int k, const ExecOptions& exec)
{
    MinimalityVerdict verdict;
    auto spanning = isPositivelyKSpanning(config, k, exec);
    if (!spanning.holds)
    {
        verdict.spanningFailure = std::move(spanning);
        return verdict;
    }

    const std::size_t n = config.size();
    const auto perMember = parallelMap(n, exec, [&](std::size_t u) {
        const IndexSet kept = complementOf({u}, n);
        KSpanningVerdict reduced = isPositivelyKSpanning(config.subconfiguration(kept), k);
        IndexSet original;
        for (auto i : reduced.deleted)
            original.push_back(kept[i]);
        return std::make_pair(reduced.holds, original);
    });

    for (std::size_t u = 0; u < n; ++u)
    {
        if (perMember[u].first)
        {
            verdict.removable = u;
            verdict.deletionWitnesses.clear();
            return verdict;
        }
        verdict.deletionWitnesses.push_back(perMember[u].second);
    }
    verdict.holds = true;
    return verdict;
}

VectorConfiguration standardMinimalConfig(int m, int k)
{
    if (m < 1 || k < 1)
        throw BadParameters("standard configuration needs m >= 1 and k >= 1");
    const Eigen::Index count = 2 * static_cast<Eigen::Index>(m) * k;
    MatrixXq vectors = MatrixXq::Zero(m, count);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(count));
    Eigen::Index col = 0;
    for (int c = 0; c < k; ++c)
    {
        for (int i = 0; i < m; ++i)
        {
            for (int sign : {1, -1})
            {
                vectors(i, col++) = sign;
                labels.push_back((sign > 0 ? "+" : "-") + std::to_string(i + 1) + "." + std::to_string(c));
            }
        }
    }
    return VectorConfiguration(m, std::move(vectors), std::move(labels));
}

}  // namespace galepoly
