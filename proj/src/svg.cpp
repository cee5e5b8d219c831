#include "galepoly/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "galepoly/errors.hpp"

namespace galepoly {

std::vector<AffineCluster> affineGaleClusters(const VectorConfiguration& config)
{
    std::vector<AffineCluster> clusters;
    for (std::size_t i = 0; i < config.size(); ++i)
    {
        const Rational h = config.vector(i).sum();
        if (h == 0)
            throw DegenerateInput("member \"" + config.label(i) + "\" lies on the projection hyperplane");
        const VectorXq position = config.vector(i) / h;
        auto it = std::find_if(clusters.begin(), clusters.end(),
                               [&](const AffineCluster& c) { return c.position == position; });
        if (it == clusters.end())
        {
            clusters.push_back({position, {}, {}});
            it = std::prev(clusters.end());
        }
        (h > 0 ? it->black : it->white).push_back(config.label(i));
    }
    return clusters;
}

namespace {

std::string fixed(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

std::string joined(const std::vector<std::string>& labels)
{
    std::string out;
    for (const auto& l : labels)
        out += (out.empty() ? "" : " ") + l;
    return out;
}

}  // namespace

std::string affineGaleSvg(const ManiPlan& plan)
{
    const Eigen::Index m = plan.configuration.dim();
    if (m != 2 && m != 3)
        throw BadParameters("affine Gale diagrams are drawn for p - 1 in {2, 3}; this plan has p - 1 = " +
                            std::to_string(m));

    // Screen anchors for e_1, ..., e_m; a cluster sits at the affine combination of them.
    std::vector<std::array<double, 2>> anchors;
    if (m == 2)
        anchors = {{{340.0, 120.0}}, {{60.0, 120.0}}};
    else
        anchors = {{{60.0, 330.0}}, {{340.0, 330.0}}, {{200.0, 87.5}}};
    const double height = m == 2 ? 200.0 : 400.0;

    const auto clusters = affineGaleClusters(plan.configuration);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"" << fixed(height)
        << "\" viewBox=\"0 0 400 " << fixed(height) << "\">\n";
    svg << "  <title>affine Gale diagram, d=" << plan.d << " p=" << plan.p << " q=" << plan.q << " ell=" << plan.ell
        << "</title>\n";
    svg << "  <rect width=\"400\" height=\"" << fixed(height) << "\" fill=\"white\"/>\n";
    if (m == 2)
        svg << "  <line x1=\"40\" y1=\"120\" x2=\"360\" y2=\"120\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    else
        svg << "  <polygon points=\"60,330 340,330 200,87.5\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";

    for (const auto& cluster : clusters)
    {
        double x = 0;
        double y = 0;
        for (Eigen::Index i = 0; i < m; ++i)
        {
            const double w = cluster.position(i).convert_to<double>();
            x += w * anchors[static_cast<std::size_t>(i)][0];
            y += w * anchors[static_cast<std::size_t>(i)][1];
        }
        svg << "  <g class=\"cluster\">\n";
        if (!cluster.black.empty())
        {
            svg << "    <circle cx=\"" << fixed(x - 9) << "\" cy=\"" << fixed(y) << "\" r=\"7\" fill=\"black\">"
                << "<title>" << joined(cluster.black) << "</title></circle>\n";
            svg << "    <text x=\"" << fixed(x - 9) << "\" y=\"" << fixed(y - 12)
                << "\" font-size=\"11\" text-anchor=\"middle\">" << cluster.black.size() << "</text>\n";
        }
        if (!cluster.white.empty())
        {
            svg << "    <circle cx=\"" << fixed(x + 9) << "\" cy=\"" << fixed(y)
                << "\" r=\"7\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\">"
                << "<title>" << joined(cluster.white) << "</title></circle>\n";
            svg << "    <text x=\"" << fixed(x + 9) << "\" y=\"" << fixed(y - 12)
                << "\" font-size=\"11\" text-anchor=\"middle\">" << cluster.white.size() << "</text>\n";
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace galepoly
