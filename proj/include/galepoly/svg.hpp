#ifndef GALEPOLY_SVG_HPP
#define GALEPOLY_SVG_HPP

#include <string>
#include <vector>

#include "galepoly/mani.hpp"

namespace galepoly {

/// One position of the affine Gale diagram with the members drawn there.
struct AffineCluster
{
    VectorXq position;  // affine coordinates, summing to 1
    std::vector<std::string> black;
    std::vector<std::string> white;
};

/**
 * Affine Gale diagram under the functional h = (1, ..., 1): each vector u is
 * sent to u / h(u), black when h(u) > 0 and white when h(u) < 0. Clusters are
 * grouped by position, in order of first appearance.
 */
std::vector<AffineCluster> affineGaleClusters(const VectorConfiguration& config);

/// Static SVG of the plan's affine Gale diagram. Needs p - 1 in {2, 3}; throws BadParameters otherwise.
std::string affineGaleSvg(const ManiPlan& plan);

}  // namespace galepoly

#endif  // GALEPOLY_SVG_HPP
