#include "blrc/analysis.hpp"
#include "blrc/catalog.hpp"
#include "blrc/combinatorics.hpp"
#include "blrc/errors.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace blrc;

namespace {

const Field kWide{catalog::kFixtureField};

BlrcCode fixture(const catalog::KnownSupport& s, std::uint64_t seed = catalog::kFixtureSeed)
{
    return s.build(kWide, seed);
}

std::uint32_t maskOf(const std::vector<int>& v)
{
    std::uint32_t m = 0;
    for (int b : v)
        m |= 1u << b;
    return m;
}

} // namespace

TEST_CASE("erasure patterns are sorted and validated")
{
    const ErasurePattern p(5, {3, 1});
    CHECK(p.indices() == std::vector<int>{1, 3});
    CHECK(p.survivors() == std::vector<int>{0, 2, 4});
    CHECK(p.contains(3));
    CHECK_THROWS(ErasurePattern(5, {5}));
    CHECK_THROWS(ErasurePattern(5, {1, 1}));
}

TEST_CASE("single repairs of the bundled codes")
{
    const BlrcCode p1 = fixture(catalog::blrc15x10());
    const RepairPlan data = minimalRepair(p1, ErasurePattern(15, {0}));
    CHECK(data.cost == 6);
    const RepairPlan parity = minimalRepair(p1, ErasurePattern(15, {10}));
    CHECK(parity.cost == 6);
    // Column 11 covers data blocks 1..6.
    CHECK(parity.helpers == std::vector<int>{0, 1, 2, 3, 4, 5});

    const BlrcCode p3 = fixture(catalog::blrc16x10Light());
    const RepairPlan light = minimalRepair(p3, ErasurePattern(16, {0}));
    CHECK(light.cost == 3);
    // Block 1 sits in parity columns 11 and 16; column 16 has weight 3.
    CHECK(std::find(light.helpers.begin(), light.helpers.end(), 15) != light.helpers.end());

    CHECK_THROWS_AS(minimalRepair(p1, ErasurePattern(15, {0, 10, 11, 13})), Undecodable);
}

TEST_CASE("repair plans reproduce the erased blocks")
{
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const BlrcCode code = testing::randomCode(rng, 6, 12);
        const Matrix& g = code.generator();
        std::vector<Symbol> data(static_cast<std::size_t>(code.k()));
        for (auto& x : data)
            x = static_cast<Symbol>(uniformBelow(rng, 256));
        const Codeword cw = code.encode(data);
        for (int e = 0; e < code.n(); ++e) {
            const RepairPlan plan = minimalRepair(g, ErasurePattern(code.n(), {e}));
            const auto coeffs = repairCoefficients(g, plan);
            Symbol rebuilt = 0;
            for (std::size_t h = 0; h < plan.helpers.size(); ++h)
                rebuilt ^= code.field().mul(coeffs[0][h], cw[static_cast<std::size_t>(plan.helpers[h])]);
            REQUIRE(rebuilt == cw[static_cast<std::size_t>(e)]);
        }
    }
}

TEST_CASE("minimal repair agrees with the all-subsets oracle")
{
    Rng rng(2024);
    for (int t = 0; t < 20; ++t) {
        const BlrcCode code = testing::randomCode(rng, 5, 12);
        const Matrix& g = code.generator();
        const auto og = testing::toOracle(g);
        const int n = code.n();
        CAPTURE(n);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                const std::vector<int> erased = a == b ? std::vector<int>{a} : std::vector<int>{a, b};
                const int want = oracle::minRepairCost(og, maskOf(erased), 8, 0x11D);
                const bool decodable = isDecodable(g, erased);
                if (!decodable) {
                    CHECK_THROWS_AS(minimalRepair(g, ErasurePattern(n, erased)), Undecodable);
                    continue;
                }
                const RepairPlan plan = minimalRepair(g, ErasurePattern(n, erased));
                REQUIRE(plan.cost == want);
                REQUIRE(plan.certifiedMinimal);
            }
    }
}

TEST_CASE("circuit-based averages equal the mean of minimal repairs")
{
    Rng rng(77);
    for (int t = 0; t < 15; ++t) {
        const BlrcCode code = testing::randomCode(rng, 6, 13);
        const Matrix& g = code.generator();
        const CircuitIndex index(g);
        for (int f = 1; f <= 3; ++f) {
            double sum = 0;
            std::uint64_t count = 0, bad = 0;
            forEachCombination(code.n(), f, [&](std::span<const int> e) {
                const std::vector<int> erased(e.begin(), e.end());
                if (!isDecodable(g, erased)) {
                    ++bad;
                    return true;
                }
                sum += minimalRepair(g, ErasurePattern(code.n(), erased)).cost;
                ++count;
                return true;
            });
            const RepairStats stats = averageRepairBandwidth(index, g, f);
            CHECK(stats.patterns == count);
            CHECK(stats.undecodable == bad);
            if (count)
                CHECK(stats.average == doctest::Approx(sum / static_cast<double>(count)).epsilon(1e-12));
        }
    }
}

TEST_CASE("single-repair cost lies in {l, l+1} and distance equals w+1")
{
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        const BlrcCode code = testing::randomCode(rng, 5, 13, kWide);
        const CodeSpec& s = code.spec();
        const CircuitIndex index(code.generator());
        for (int b = 0; b < code.n(); ++b) {
            const auto cost = index.singleCost(b);
            REQUIRE(cost.has_value());
            CHECK((*cost == s.l() || *cost == s.l() + 1));
        }
        CHECK(minimumDistance(code) == s.w + 1);
    }
}

TEST_CASE("decodability profile")
{
    const BlrcCode p1 = fixture(catalog::blrc15x10());
    const auto prof = decodabilityProfile(p1, 6);
    for (int f = 1; f <= 3; ++f)
        CHECK(prof.at(f) == 1.0);
    // Exactly the ten patterns "data block plus its three parities" fail.
    CHECK(prof.at(4) == doctest::Approx(1.0 - 10.0 / 1365.0).epsilon(1e-15));
    CHECK(prof.at(4) == doctest::Approx(0.992674).epsilon(5e-7));
    CHECK(prof.at(5) == doctest::Approx(0.89677).epsilon(5e-6));
    CHECK(prof.at(6) == 0.0);
    double prev = 1.0;
    for (const auto& [f, p] : prof) {
        CHECK(p <= prev);
        prev = p;
    }
}

TEST_CASE("metrics of the bundled codes")
{
    const MetricsReport p1 = buildReport(fixture(catalog::blrc15x10()));
    CHECK(p1.storageOverhead == doctest::Approx(0.5));
    CHECK(p1.avgRepairSingle == 6.0);
    CHECK(p1.avgRepairDouble == 9.0);
    CHECK(p1.updateComplexity == 4);
    CHECK(p1.minDistance == 4);
    CHECK(p1.distanceBound == 5);

    const MetricsReport p2 = buildReport(fixture(catalog::blrc16x10()));
    CHECK(p2.avgRepairSingle == 5.0);
    CHECK(p2.decodability.at(4) == doctest::Approx(0.9945).epsilon(0.002));
    CHECK(p2.decodability.at(5) == doctest::Approx(0.9602).epsilon(0.002));
    CHECK(p2.decodability.at(6) == doctest::Approx(0.7966).epsilon(0.002));

    const MetricsReport p3 = buildReport(fixture(catalog::blrc16x10Light()));
    CHECK(p3.avgRepairSingle == 3.125);
    CHECK(p3.avgColumnWeight == doctest::Approx(20.0 / 6.0));
    CHECK(p3.updateComplexity == 3);
    CHECK(p3.minDistance == 3);
}

TEST_CASE("decodability of a support does not depend on the coefficient seed")
{
    const auto& s = catalog::blrc16x10();
    const auto base = decodabilityProfile(s.build(kWide, 1), 7);
    for (std::uint64_t seed : {2u, 3u})
        CHECK(decodabilityProfile(s.build(kWide, seed), 7) == base);
}
