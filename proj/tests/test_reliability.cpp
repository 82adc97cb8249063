#include "blrc/catalog.hpp"
#include "blrc/refcodes.hpp"
#include "blrc/reliability.hpp"
#include "blrc/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace blrc;

namespace {

// Chain from explicit off-diagonal rates; the last `absorbing` states absorb.
MarkovModel chain(const std::vector<std::vector<double>>& rates, std::size_t absorbing)
{
    MarkovModel m;
    const std::size_t n = rates.size();
    for (std::size_t i = 0; i < n; ++i)
        m.states.push_back({std::to_string(i), i + absorbing >= n});
    m.generator = rates;
    for (std::size_t i = 0; i < n; ++i) {
        double out = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                out += rates[i][j];
        m.generator[i][i] = -out;
    }
    return m;
}

const MetricsReport& p1Report()
{
    static const MetricsReport r = buildReport(catalog::blrc15x10().build(Field(catalog::kFixtureField), catalog::kFixtureSeed));
    return r;
}

} // namespace

TEST_CASE("two-state chain has an exponential sojourn")
{
    const double lambda = 1.0 / 1460.0;
    CHECK(mttdlStripe(chain({{0, lambda}, {0, 0}}, 1)) == doctest::Approx(1460.0).epsilon(1e-12));
}

TEST_CASE("three-state chain matches the closed form, including stiff rates")
{
    // up -a-> degraded -b-> lost, degraded -mu-> up:  T = (a + b + mu) / (a b)
    for (const auto& [a, b, mu] : {std::tuple{1.0, 2.0, 3.0}, std::tuple{15.0 / 1460, 14.0 / 1460, 5625.0},
                                   std::tuple{1e-6, 1e-6, 1e6}}) {
        const double want = (a + b + mu) / (a * b);
        const double got = mttdlStripe(chain({{0, a, 0}, {mu, 0, b}, {0, 0, 0}}, 1));
        CHECK(std::fabs(got - want) / want < 1e-9);
    }
}

TEST_CASE("absorption that cannot happen gives infinity")
{
    CHECK(std::isinf(mttdlStripe(chain({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}, 1))));
}

TEST_CASE("solver agrees with Monte Carlo on a five-state chain")
{
    // 0 <-> 1 <-> 2 -> 4 (lost), 1 -> 3 (lost)
    const std::vector<std::vector<double>> rates{{0, 1.0, 0, 0, 0},
                                                 {2.0, 0, 0.8, 0.1, 0},
                                                 {0, 1.5, 0, 0, 0.7},
                                                 {0, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, 0}};
    const double exact = mttdlStripe(chain(rates, 2));

    Rng rng(99);
    const int trials = 100000;
    double sum = 0, sumSq = 0;
    for (int t = 0; t < trials; ++t) {
        std::size_t s = 0;
        double time = 0;
        while (s < 3) {
            double total = 0;
            for (double r : rates[s])
                total += r;
            time += -std::log(1.0 - uniformUnit(rng)) / total;
            double pick = uniformUnit(rng) * total;
            std::size_t next = 0;
            while (pick >= rates[s][next] || rates[s][next] == 0) {
                pick -= rates[s][next];
                ++next;
            }
            s = next;
        }
        sum += time;
        sumSq += time * time;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt((sumSq / trials - mean * mean) / trials);
    CHECK(std::fabs(mean - exact) < 3 * sd);
}

TEST_CASE("chain built from the [15,10] code")
{
    const auto params = ReliabilityParams::defaults();
    const MarkovModel m = buildModel(p1Report(), params);
    for (const char* label : {"15", "14", "13", "12", "11", "10", "11F", "10F", "9"})
        CHECK_MESSAGE(m.find(label).has_value(), label);
    for (std::size_t i = 0; i < m.size(); ++i) {
        double out = 0;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != i) {
                CHECK(m.generator[i][j] >= 0.0);
                out += m.generator[i][j];
            }
        CHECK(m.generator[i][i] == -out);
        if (!m.states[i].absorbing)
            CHECK(m.generator[i][i] < 0.0);
    }
    // From 12 available blocks a fourth failure is survivable with p_4.
    const auto i12 = *m.find("12"), i11 = *m.find("11"), f11 = *m.find("11F");
    const double fail = 12 * params.failureRatePerDay();
    CHECK(m.rate(i12, i11) == doctest::Approx(fail * p1Report().decodability.at(4)));
    CHECK(m.rate(i12, f11) == doctest::Approx(fail * (1 - p1Report().decodability.at(4))));
    // Single repairs move 6 blocks of 256 MB at 1 Gb/s.
    CHECK(m.rate(*m.find("14"), *m.find("15")) == doctest::Approx(86400.0 / (6 * 256e6 * 8 / 1e9)));
}

TEST_CASE("stripe count and system MTTDL")
{
    const auto params = ReliabilityParams::defaults();
    CHECK(params.stripeCount(15) == doctest::Approx(7812500.0));
    CHECK(mttdlSystem(10.0, 15, params) == doctest::Approx(10.0 / 7812500.0));
    const double system = mttdlSystem(mttdlStripe(buildModel(p1Report(), params)), 15, params);
    CHECK(std::fabs(system / 3.3647e14 - 1) < 0.05);
}

TEST_CASE("MTTDL is monotone in failure and repair rates")
{
    double prev = INFINITY;
    for (double years : {8.0, 4.0, 2.0, 1.0}) {
        const auto p = ReliabilityParams::fromHumanUnits(30, 3000, 256, 1, years, UnitConvention::Decimal);
        const double t = mttdlStripe(buildModel(p1Report(), p));
        CHECK(t <= prev);
        prev = t;
    }
    prev = 0;
    for (double gbps : {0.25, 0.5, 1.0, 10.0}) {
        const auto p = ReliabilityParams::fromHumanUnits(30, 3000, 256, gbps, 4, UnitConvention::Decimal);
        const double t = mttdlStripe(buildModel(p1Report(), p));
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("replication chain")
{
    const auto params = ReliabilityParams::defaults();
    const MetricsReport r = buildReplication(3).report;
    const MarkovModel m = buildModel(r, params);
    CHECK(m.size() == 4); // 3, 2, 1 copies and lost
    const double lambda = params.failureRatePerDay();
    const double mu = params.repairRatePerDay(1);
    // Birth-death hitting time: sum_i sum_{j<=i} (1/up_j) prod_{j<m<=i} (mu/up_m).
    const double up[3] = {3 * lambda, 2 * lambda, lambda};
    double exact = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) {
            double term = 1 / up[j];
            for (int q = j + 1; q <= i; ++q)
                term *= mu / up[q];
            exact += term;
        }
    const double t = mttdlStripe(m);
    CHECK(std::fabs(t / exact - 1) < 1e-9);
    const double system = mttdlSystem(t, 3, params);
    CHECK(system > 2.3079e9);
    CHECK(system < 2.3079e11);
    CHECK_THROWS(buildReplication(1));
}

TEST_CASE("parameter validation and units")
{
    CHECK_THROWS(ReliabilityParams::fromHumanUnits(0, 3000, 256, 1, 4, UnitConvention::Decimal));
    CHECK_THROWS(parseUnitConvention("metric"));
    const auto bin = ReliabilityParams::defaults(UnitConvention::Binary);
    CHECK(bin.blockBytes == 256.0 * 1048576.0);
    CHECK(bin.totalBytes == 30.0 * std::ldexp(1.0, 50));

    ChainInputs in;
    in.n = 4;
    in.k = 2;
    in.decodability = {{1, 1.0}, {2, 0.5}, {3, 0.8}};
    CHECK_THROWS(buildModel(in, ReliabilityParams::defaults())); // p_f increases
}
