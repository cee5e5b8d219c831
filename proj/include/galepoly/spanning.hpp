#ifndef GALEPOLY_SPANNING_HPP
#define GALEPOLY_SPANNING_HPP

#include <optional>

#include "galepoly/configuration.hpp"
#include "galepoly/lp.hpp"
#include "galepoly/parallel.hpp"

namespace galepoly {

/**
 * Verdict of the k-spanning test. On failure `deleted` is the
 * lexicographically least deletion set whose removal breaks positive spanning
 * and `certificate` explains why (Stiemke witness or rank deficiency, issued
 * for the remaining vectors in index order).
 */
struct KSpanningVerdict
{
    bool holds = false;
    IndexSet deleted;
    std::optional<DependenceCertificate> certificate;
};

/// Every deletion of k-1 members still positively spans R^m.
KSpanningVerdict isPositivelyKSpanning(const VectorConfiguration& config, int k, const ExecOptions& exec = {});

/**
 * Minimality verdict. If the configuration is not k-spanning at all,
 * `spanningFailure` carries that failure. If some member can be dropped
 * without losing k-spanning, `removable` names the least such index.
 * On success `deletionWitnesses[u]` is a deletion set that breaks C \ {u}.
 */
struct MinimalityVerdict
{
    bool holds = false;
    std::optional<KSpanningVerdict> spanningFailure;
    std::optional<std::size_t> removable;
    std::vector<IndexSet> deletionWitnesses;
};

MinimalityVerdict isMinimalKSpanning(const VectorConfiguration& config, int k, const ExecOptions& exec = {});

/// k copies of +-e_1, ..., +-e_m, labeled "+i.c" / "-i.c" (axis i, copy c).
VectorConfiguration standardMinimalConfig(int m, int k);

}  // namespace galepoly

#endif  // GALEPOLY_SPANNING_HPP
