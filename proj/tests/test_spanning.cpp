#include "doctest.h"

#include <random>

#include "galepoly/spanning.hpp"
#include "support.hpp"

using namespace galepoly;
using testsupport::cols;

namespace {

VectorConfiguration crossConfig()
{
    return VectorConfiguration(2, cols({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), {"+1", "-1", "+2", "-2"});
}

/// k-spanning by brute force: every (k-1)-deletion positively spans, by the definitional oracle.
bool oracleKSpanning(const VectorConfiguration& config, int k)
{
    const auto n = config.size();
    if (static_cast<std::size_t>(k - 1) >= n)
        return false;
    for (const auto& deleted : combinations(n, static_cast<std::size_t>(k - 1)))
    {
        const auto kept = complementOf(deleted, n);
        if (!testsupport::oraclePositivelySpans(config.columns(kept)))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("k-spanning examples")
{
    SUBCASE("two copies of the cross are 2-spanning")
    {
        const auto v = isPositivelyKSpanning(standardMinimalConfig(2, 2), 2);
        CHECK(v.holds);
        CHECK(v.deleted.empty());
    }
    SUBCASE("one cross is not 2-spanning; deleting e1 breaks it")
    {
        const auto config = crossConfig();
        const auto v = isPositivelyKSpanning(config, 2);
        CHECK_FALSE(v.holds);
        CHECK(v.deleted == IndexSet{0});
        REQUIRE(v.certificate);
        CHECK(verifyCertificate(config.without(v.deleted).matrix(), *v.certificate));
    }
    SUBCASE("positive basis is 1-spanning")
    {
        const auto config = testsupport::configOf(cols({{1, 0}, {0, 1}, {-1, -1}}));
        CHECK(isPositivelyKSpanning(config, 1).holds);
    }
    SUBCASE("deleting more vectors than exist")
    {
        const auto config = testsupport::configOf(cols({{1}, {-1}}));
        const auto v = isPositivelyKSpanning(config, 5);
        CHECK_FALSE(v.holds);
        CHECK(v.deleted == IndexSet{0, 1});
    }
}

TEST_CASE("minimality examples")
{
    SUBCASE("standard configuration (2,2)")
    {
        const auto v = isMinimalKSpanning(standardMinimalConfig(2, 2), 2);
        CHECK(v.holds);
        CHECK(v.deletionWitnesses.size() == 8);
    }
    SUBCASE("extra vector makes it non-minimal")
    {
        const auto base = standardMinimalConfig(2, 2);
        MatrixXq m(2, 9);
        m.leftCols(8) = base.matrix();
        m.col(8) = testsupport::vec({1, 1});
        auto labels = base.labels();
        labels.push_back("diag");
        const VectorConfiguration config(2, m, labels);
        const auto v = isMinimalKSpanning(config, 2);
        CHECK_FALSE(v.holds);
        REQUIRE(v.removable);
        // The reported witness really is removable, and so is the extra vector.
        CHECK(isPositivelyKSpanning(config.without({*v.removable}), 2).holds);
        CHECK(isPositivelyKSpanning(config.without({8}), 2).holds);
    }
    SUBCASE("segment in R^1")
    {
        const auto config = testsupport::configOf(cols({{1}, {-1}}));
        CHECK(isMinimalKSpanning(config, 1).holds);
    }
    SUBCASE("not spanning at all")
    {
        const auto v = isMinimalKSpanning(crossConfig(), 2);
        CHECK_FALSE(v.holds);
        CHECK(v.spanningFailure);
    }
}

TEST_CASE("standard configurations")
{
    const auto small = standardMinimalConfig(2, 1);
    CHECK(small.size() == 4);
    const auto line = standardMinimalConfig(1, 1);
    REQUIRE(line.size() == 2);
    CHECK(line.vector(0)(0) == 1);
    CHECK(line.vector(1)(0) == -1);
    CHECK(standardMinimalConfig(3, 2).size() == 12);

    for (int m = 1; m <= 4; ++m)
    {
        for (int k = 1; k <= 3; ++k)
        {
            CAPTURE(m);
            CAPTURE(k);
            const auto config = standardMinimalConfig(m, k);
            CHECK(config.size() == static_cast<std::size_t>(2 * k * m));
            CHECK(isMinimalKSpanning(config, k).holds);
        }
    }
}

TEST_CASE("k-spanning agrees with the brute-force oracle and is monotone")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dims(1, 2);
    std::uniform_int_distribution<int> sizes(2, 7);
    int spanningSeen = 0;
    for (int trial = 0; trial < 120; ++trial)
    {
        const int m = dims(rng);
        const int n = sizes(rng);
        const auto config = testsupport::configOf(testsupport::randomIntegerMatrix(rng, m, n, 2));
        for (int k = 1; k <= 3; ++k)
        {
            const bool holds = isPositivelyKSpanning(config, k).holds;
            CHECK(holds == oracleKSpanning(config, k));
            if (holds && k >= 2)
                CHECK(isPositivelyKSpanning(config, k - 1).holds);
            spanningSeen += holds ? 1 : 0;
        }
    }
    CHECK(spanningSeen > 0);
}

TEST_CASE("greedily pruned minimal positive spanning sets have size between m+1 and 2m")
{
    std::mt19937 rng(4242);
    int pruned = 0;
    for (int trial = 0; trial < 60; ++trial)
    {
        const int m = 1 + trial % 3;
        auto config = testsupport::configOf(testsupport::randomIntegerMatrix(rng, m, 2 * m + 4, 3));
        if (!isPositivelyKSpanning(config, 1).holds)
            continue;
        bool removed = true;
        while (removed)
        {
            removed = false;
            for (std::size_t i = 0; i < config.size(); ++i)
            {
                auto smaller = config.without({i});
                if (isPositivelyKSpanning(smaller, 1).holds)
                {
                    config = std::move(smaller);
                    removed = true;
                    break;
                }
            }
        }
        CHECK(isMinimalKSpanning(config, 1).holds);
        CHECK(config.size() >= static_cast<std::size_t>(m + 1));
        CHECK(config.size() <= static_cast<std::size_t>(2 * m));
        ++pruned;
    }
    CHECK(pruned >= 20);
}

TEST_CASE("parallel scan reports the same witness")
{
    const auto config = crossConfig();
    const auto serial = isPositivelyKSpanning(config, 2, ExecOptions{1});
    const auto parallel = isPositivelyKSpanning(config, 2, ExecOptions{4});
    CHECK(serial.deleted == parallel.deleted);
}
