#include "doctest.h"

#include "galepoly/errors.hpp"
#include "galepoly/lp.hpp"
#include "support.hpp"

using namespace galepoly;
using testsupport::cols;
using testsupport::vec;

TEST_CASE("phase one feasibility")
{
    SUBCASE("feasible point is returned")
    {
        const MatrixXq a = cols({{1, 0}, {1, 1}, {0, 1}});
        const VectorXq b = vec({2, 3});
        const auto r = solveNonnegative(a, b);
        REQUIRE(r.feasible);
        CHECK(a * r.solution == b);
        for (Eigen::Index i = 0; i < r.solution.size(); ++i)
            CHECK(r.solution(i) >= 0);
    }
    SUBCASE("infeasible system yields a Farkas vector")
    {
        const MatrixXq a = cols({{1}, {2}});
        const VectorXq b = vec({-1});
        const auto r = solveNonnegative(a, b);
        REQUIRE_FALSE(r.feasible);
        const VectorXq yA = a.transpose() * r.farkas;
        for (Eigen::Index i = 0; i < yA.size(); ++i)
            CHECK(yA(i) <= 0);
        CHECK(r.farkas.dot(b) > 0);
    }
    SUBCASE("degenerate repeated columns do not cycle")
    {
        MatrixXq a(2, 8);
        for (Eigen::Index c = 0; c < 8; ++c)
            a.col(c) = c % 2 == 0 ? vec({1, -1}) : vec({-1, 1});
        const auto r = solveNonnegative(a, vec({0, 0}));
        CHECK(r.feasible);
    }
}

TEST_CASE("strict positive dependence")
{
    SUBCASE("positive basis of the plane")
    {
        const auto cert = strictPositiveDependence(cols({{1, 0}, {0, 1}, {-1, -1}}));
        REQUIRE((cert.kind == CertificateKind::PositiveDependence));
        CHECK(cert.lambda == std::vector<Rational>{1, 1, 1});
    }
    SUBCASE("open halfspace")
    {
        const MatrixXq u = cols({{1, 0}, {0, 1}});
        const auto cert = strictPositiveDependence(u);
        REQUIRE((cert.kind == CertificateKind::StiemkeWitness));
        CHECK(*cert.functional == vec({1, 1}));
        CHECK(verifyCertificate(u, cert));
    }
    SUBCASE("antipodal pair")
    {
        const auto cert = strictPositiveDependence(cols({{1, 0}, {-1, 0}}));
        REQUIRE((cert.kind == CertificateKind::PositiveDependence));
        CHECK(cert.lambda == std::vector<Rational>{1, 1});
    }
    SUBCASE("empty selection")
    {
        const auto config = testsupport::configOf(cols({{1, 0}}));
        CHECK_THROWS_AS(strictPositiveDependence(config, IndexSet{}), EmptySelection);
    }
}

TEST_CASE("positive spanning")
{
    SUBCASE("cross")
    {
        const auto r = positivelySpans(cols({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
        CHECK(r.spans);
        CHECK((r.certificate.kind == CertificateKind::PositiveDependence));
    }
    SUBCASE("missing the negative y direction")
    {
        const MatrixXq u = cols({{1, 0}, {0, 1}, {-1, 0}});
        const auto r = positivelySpans(u);
        CHECK_FALSE(r.spans);
        REQUIRE((r.certificate.kind == CertificateKind::StiemkeWitness));
        CHECK(*r.certificate.functional == vec({0, 1}));
        CHECK(verifyCertificate(u, r.certificate));
    }
    SUBCASE("rank deficient")
    {
        const MatrixXq u = cols({{1, 0}, {-1, 0}});
        const auto r = positivelySpans(u);
        CHECK_FALSE(r.spans);
        REQUIRE((r.certificate.kind == CertificateKind::RankDeficiency));
        CHECK(*r.certificate.deficientDirection == vec({0, 1}));
        CHECK(verifyCertificate(u, r.certificate));
    }
}

TEST_CASE("interior point test")
{
    const auto sq = testsupport::square();
    CHECK(interiorPointTest(sq, vec({0, 0})).spans);
    CHECK_FALSE(interiorPointTest(sq, vec({1, 0})).spans);

    const auto outside = interiorPointTest(sq, vec({3, 0}));
    CHECK_FALSE(outside.spans);
    REQUIRE((outside.certificate.kind == CertificateKind::StiemkeWitness));
    const VectorXq c = *outside.certificate.functional;
    // <c, v - x> >= 0 for every vertex v: c separates x = (3,0) from the square.
    MatrixXq translated = sq.matrix();
    for (Eigen::Index i = 0; i < translated.cols(); ++i)
        translated.col(i) -= vec({3, 0});
    CHECK(verifyCertificate(translated, outside.certificate));
    CHECK(c(0) < 0);

    CHECK_THROWS_AS(interiorPointTest(sq, vec({0, 0, 0})), DimensionMismatch);
}

TEST_CASE("barycenter of a simplex is interior")
{
    for (int d = 1; d <= 5; ++d)
    {
        MatrixXq vertices = MatrixXq::Zero(d, d + 1);
        for (int i = 0; i < d; ++i)
            vertices(i, i + 1) = 1;
        const VectorXq barycenter = vertices.rowwise().sum() / Rational(d + 1);
        CHECK(interiorPointTest(vertices, barycenter).spans);
    }
}

TEST_CASE("convex hull membership and vertices")
{
    const MatrixXq points = cols({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
    CHECK(inConvexHull(points, vec({1, 0})));
    CHECK_FALSE(inConvexHull(points, vec({2, 2})));
    CHECK(isVertex(points, 0));
    CHECK_FALSE(isVertex(points, 3));
    CHECK(isNonnegativeCombination(points.leftCols(3), vec({3, 3})));
    CHECK_FALSE(isNonnegativeCombination(points.leftCols(3), vec({-1, 0})));
}
