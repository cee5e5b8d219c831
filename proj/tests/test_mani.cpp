#include "doctest.h"

#include "galepoly/errors.hpp"
#include "galepoly/gale.hpp"
#include "galepoly/mani.hpp"
#include "support.hpp"

using namespace galepoly;
using testsupport::asLabelSets;
using testsupport::cols;

TEST_CASE("formulas")
{
    const auto d36 = formulas(36);
    CHECK(d36.p == 6);
    CHECK(d36.q == 6);
    CHECK(d36.M == 49);
    const auto d16 = formulas(16);
    CHECK(d16.p == 4);
    CHECK(d16.M == 25);
    CHECK(formulas(6).p == 2);
    CHECK(formulas(6).M == 12);
    CHECK(formulas(7).p == 3);
    CHECK(formulas(7).M == 14);
    CHECK(formulas(1).M == 2);

    for (int d = 1; d <= 10000; ++d)
    {
        const auto row = formulas(d);
        const int p = testsupport::floatBlockParameter(d);
        if (row.p != p || row.q != (d + p - 1) / p)
            FAIL("block parameters disagree at d = " << d);
        const long long linear = std::min<long long>(2LL * d, testsupport::floatLinearForm(d));
        const long long square = std::min<long long>(2LL * d, testsupport::floatSquareForm(d));
        if (row.M != linear || row.M != square)
            FAIL("M(d) disagrees at d = " << d);
    }
}

TEST_CASE("first dimension with nu below 2d")
{
    int first = 0;
    for (int d = 1; d <= 100 && first == 0; ++d)
        if (formulas(d).nu < 2 * d)
            first = d;
    CHECK(first == 8);
}

TEST_CASE("building block A")
{
    SUBCASE("d = 6")
    {
        const auto plan = buildA(6, 3, 1);
        CHECK(plan.q == 2);
        CHECK(plan.configuration.size() == 9);
        REQUIRE(plan.designatedComplements.size() == 3);
        const MatrixXq b1 = plan.configuration.columns(plan.designatedComplements[0]);
        CHECK(b1 == cols({{-1, -1}, {1, 0}, {0, 1}}));
        const MatrixXq expected = cols({{1, 1}, {-1, 0}, {0, -1}});
        CHECK(plan.configuration.columns(plan.designatedComplements[1]) == expected);
        CHECK(plan.configuration.columns(plan.designatedComplements[2]) == expected);
        CHECK(plan.designatedComplements[1] != plan.designatedComplements[2]);
    }
    SUBCASE("d = 16, ell = 3")
    {
        const auto plan = buildA(16, 4, 3);
        CHECK(plan.configuration.size() == 20);
        REQUIRE(plan.designatedComplements.size() == 5);
        std::vector<bool> used(20, false);
        for (const auto& s : plan.designatedComplements)
        {
            CHECK(s.size() == 4);
            for (auto i : s)
            {
                CHECK_FALSE(used[i]);
                used[i] = true;
            }
        }
    }
    SUBCASE("d = 7")
    {
        const auto plan = buildA(7, 3, 1);
        CHECK(plan.configuration.size() == 10);
        const auto ones = plan.configuration.indexOf("T.0");
        CHECK(plan.configuration.vector(ones) == testsupport::vec({1, 1}));
        CHECK(ones == 9);
        // B' is the lone third-group vector plus the last two members of the first copy of -B.
        const auto& bprime = plan.designatedComplements.back();
        CHECK(plan.complementNames.back() == "B'");
        CHECK(bprime.size() == 3);
        CHECK(plan.configuration.labelsOf(bprime) == std::vector<std::string>{"Bt1.1", "Bt1.2", "T.0"});
    }
    SUBCASE("parameter ranges")
    {
        CHECK_THROWS_AS(buildA(5, 3, 1), BadParameters);
        CHECK_THROWS_AS(buildA(6, 2, 1), BadParameters);
        CHECK_THROWS_AS(buildA(6, 3, 2), BadParameters);
        CHECK_THROWS_AS(buildA(6, 3, 0), BadParameters);
        CHECK_THROWS_AS(buildA(6, 6, 1), BadParameters);
    }
}

TEST_CASE("plan invariants for 6 <= d <= 60")
{
    for (int d = 6; d <= 60; ++d)
    {
        const int p = d == 6 ? 3 : blockParameter(d);
        const int q = (d + p - 1) / p;
        for (int ell = 1; ell <= q - 1; ++ell)
        {
            CAPTURE(d);
            CAPTURE(ell);
            const auto plan = buildA(d, p, ell);
            CHECK(plan.configuration.size() == static_cast<std::size_t>(ell * p + (q - ell) * p + (d + p - p * q)));
            CHECK(plan.configuration.size() == static_cast<std::size_t>(d + p));
            std::vector<bool> covered(plan.configuration.size(), false);
            for (const auto& s : plan.designatedComplements)
            {
                CHECK(s.size() == static_cast<std::size_t>(p));
                CHECK(positivelySpans(plan.configuration, s).spans);
                for (auto i : s)
                    covered[i] = true;
            }
            CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
            // An opposite pair between the first B and the first -B is a coface.
            const auto plus = plan.configuration.indexOf("B1.1");
            const auto minus = plan.configuration.indexOf("Bt1.1");
            CHECK(plan.configuration.vector(plus) == -plan.configuration.vector(minus));
            CHECK(isCoface(plan.configuration, {plus, minus}).isCoface);
        }
        const auto row = formulas(d);
        if (d != 6)
            CHECK(d + p + q + 1 == row.nu);
        CHECK(d + p + q + 1 == (d == 6 ? 12 : row.nu));
    }
}

TEST_CASE("designated complements are minimal cofaces of size p")
{
    for (int d : {6, 7, 8, 9, 10, 12})
    {
        const int p = d == 6 ? 3 : blockParameter(d);
        const auto plan = buildA(d, p, 1);
        const auto complements = enumerateFacetComplements(plan.configuration);
        for (const auto& s : plan.designatedComplements)
            CHECK(std::find(complements.begin(), complements.end(), s) != complements.end());
    }
}

TEST_CASE("nonsimplicial construction")
{
    SUBCASE("d = 6 full with geometric cross-check")
    {
        ManiOptions options;
        options.geometricCrossCheck = true;
        const auto c = constructNonsimplicialMani(6, options);
        CHECK(c.plan.p == 3);
        CHECK(c.f0 == 12);
        CHECK(c.formula.M == 12);
        CHECK(c.illuminated);
        CHECK(c.unneighborly);
        CHECK(c.nonsimplicial);
        REQUIRE(c.q);
        REQUIRE(c.p);
        CHECK(c.q->vertexCount() == 9);
        CHECK(c.q->facetCount() == 15);
        for (const auto& check : c.checks)
        {
            CAPTURE(check.name);
            CHECK(check.passed);
        }
        // Stacked vertices are joined only to their own facet.
        const auto& p = *c.p;
        for (std::size_t j = 0; j < c.apexLabels.size(); ++j)
        {
            const auto apex = p.indexOf(c.apexLabels[j]);
            for (std::size_t v = 0; v < p.vertexCount(); ++v)
            {
                if (v == apex)
                    continue;
                const bool onFacet = !isInnerDiagonal(p, apex, v);
                const auto& complement = c.plan.designatedComplements[j];
                const bool inComplement = v < c.plan.configuration.size() &&
                                          std::binary_search(complement.begin(), complement.end(), v);
                if (v < c.plan.configuration.size())
                    CHECK(onFacet != inComplement);
                else
                    CHECK_FALSE(isEdge(p, apex, v));
            }
        }
    }
    SUBCASE("d = 8 certificates pass with 15 vertices")
    {
        const auto c = constructNonsimplicialMani(8);
        CHECK(c.f0 == 15);
        CHECK(c.formula.M == 15);
    }
    SUBCASE("certificate mode for 6 <= d <= 14 gives d + p + q + 1 vertices")
    {
        for (int d = 6; d <= 14; ++d)
        {
            ManiOptions options;
            options.mode = BuildMode::Certificate;
            const auto c = constructNonsimplicialMani(d, options);
            CHECK(c.f0 == static_cast<std::size_t>(d + c.plan.p + c.plan.q + 1));
            CHECK(c.f0 == static_cast<std::size_t>(c.formula.M));
            CHECK(c.illuminated);
            CHECK(c.nonsimplicial);
        }
    }
    SUBCASE("full and certificate mode agree on d = 7")
    {
        ManiOptions certificate;
        certificate.mode = BuildMode::Certificate;
        const auto a = constructNonsimplicialMani(7);
        const auto b = constructNonsimplicialMani(7, certificate);
        CHECK(a.f0 == b.f0);
        CHECK(a.illuminated == b.illuminated);
        REQUIRE(b.realizedP);
        CHECK(b.realizedP->size() == a.f0);
    }
    SUBCASE("bad dimension")
    {
        CHECK_THROWS_AS(constructNonsimplicialMani(5), BadParameters);
    }
}

TEST_CASE("geometric stack point")
{
    SUBCASE("simplex")
    {
        const auto points = testsupport::pointsOf(cols({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        const auto apex = geometricStackPoint(points, {1, 2, 3});
        const auto grown = points.withPoint(apex.point, "z");
        for (std::size_t i = 0; i < grown.size(); ++i)
            CHECK(isVertex(grown.matrix(), static_cast<Eigen::Index>(i)));
        const auto base = testsupport::oraclePolytope(points);
        const auto stacked = testsupport::oraclePolytope(grown);
        CHECK(stacked == stackSimplexFacet(base, {1, 2, 3}, "z"));
    }
    SUBCASE("octahedron")
    {
        const auto points = testsupport::pointsOf(
            cols({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
        const IndexSet top{0, 2, 4};
        const auto apex = geometricStackPoint(points, top);
        CHECK(apex.point(0) == apex.point(1));
        CHECK(apex.point(1) == apex.point(2));
        CHECK(apex.point(0) > Rational(1, 3));
        const auto grown = points.withPoint(apex.point, "z");
        for (auto minus : {1, 3, 5})
        {
            const VectorXq mid = (apex.point + points.point(static_cast<std::size_t>(minus))) / Rational(2);
            CHECK(interiorPointTest(grown, mid).spans);
        }
        CHECK(testsupport::oraclePolytope(grown) ==
              stackSimplexFacet(testsupport::oraclePolytope(points), top, "z"));
    }
    SUBCASE("elongated triangle needs a halving")
    {
        const auto points = testsupport::pointsOf(cols({{0, 0}, {2, 0}, {3, -1}}));
        const auto apex = geometricStackPoint(points, {0, 1});
        CHECK(apex.halvings >= 1);
        // The first candidate swallows b = (2,0): it is the midpoint of the candidate and c.
        const VectorXq barycenter = testsupport::vec({1, 0});
        const VectorXq first = barycenter + (apex.point - barycenter) / apex.epsilon;
        const auto rejected = points.withPoint(first, "z");
        CHECK_FALSE(isVertex(rejected.matrix(), 1));
        const auto grown = points.withPoint(apex.point, "z");
        CHECK(testsupport::oraclePolytope(grown) ==
              stackSimplexFacet(testsupport::oraclePolytope(points), {0, 1}, "z"));
    }
    SUBCASE("not a facet")
    {
        const auto points = testsupport::square();
        CHECK_THROWS_AS(geometricStackPoint(points, {0, 2}), NotASupportedSimplex);
        CHECK_THROWS_AS(geometricStackPoint(points, {0}), NotASupportedSimplex);
    }
}

TEST_CASE("simplicial construction")
{
    const auto six = maniSimplicial(6);
    CHECK(six.polytope.vertexCount() == 12);
    CHECK(six.illuminated);
    CHECK(six.simplicial);
    CHECK(six.isManiPolytope);

    const auto four = maniSimplicial(4);
    CHECK(four.polytope.vertexCount() == 9);
    CHECK(four.illuminated);
    CHECK_FALSE(four.isManiPolytope);

    for (int d = 3; d <= 12; ++d)
    {
        CAPTURE(d);
        const auto r = maniSimplicial(d);
        CHECK(r.polytope.vertexCount() == static_cast<std::size_t>(r.formula.nu));
        CHECK(r.stackedFacets.size() == static_cast<std::size_t>(r.formula.q + 1));
        CHECK(r.polytope.isSimplicial());
        const auto report = illuminationReport(r.polytope);
        CHECK(report.isIlluminated);
        CHECK(report.isUnneighborly);
        CHECK(r.isManiPolytope == (r.formula.nu <= 2 * d));
    }
    CHECK_THROWS_AS(maniSimplicial(2), BadParameters);
}

TEST_CASE("dual of the d = 6 polytope is minimal 2-spanning")
{
    const auto r = unneighborlyDualPipeline(6);
    CHECK(r.dual.size() == 12);
    CHECK(r.dual.dim() == 5);
    CHECK(r.minimality.holds);
    CHECK(r.conjecturedBound == 20);
    CHECK_FALSE(r.refutesBound);
}
