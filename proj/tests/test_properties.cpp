#include "doctest.h"

#include "properties.hpp"

namespace {

void require(const properties::Outcome& outcome, int minimumCases)
{
    INFO(outcome.firstFailure);
    CHECK(outcome.cases >= minimumCases);
    CHECK(outcome.failures == 0);
}

}  // namespace

TEST_CASE("Gale round trip preserves cofaces")
{
    require(properties::galeRoundTrip(1001, 200), 200);
}

TEST_CASE("Stiemke alternative is exclusive and certified")
{
    require(properties::stiemkeAlternative(2002, 1000), 1000);
}

TEST_CASE("minimal cofaces respect the Caratheodory bound")
{
    require(properties::caratheodoryBound(3003, 150), 150);
}

TEST_CASE("inner diagonals agree with the geometric test")
{
    require(properties::innerDiagonalAgreement(4004, 50), 50);
}

TEST_CASE("illuminated polytopes are unneighborly")
{
    require(properties::illuminationImpliesUnneighborly(5005, 30), 30);
}
