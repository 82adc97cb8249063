// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include "blrc/analysis.hpp"
#include "blrc/catalog.hpp"
#include "blrc/codefile.hpp"
#include "blrc/combinatorics.hpp"
#include "blrc/refcodes.hpp"
#include "blrc/reliability.hpp"
#include "blrc/reporting.hpp"
#include "blrc/search.hpp"
#include "blrc/shards.hpp"
#include "test_helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unistd.h>
#include <vector>

using namespace blrc;
namespace fs = std::filesystem;

namespace {

const Field kWide{catalog::kFixtureField};

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void expect(bool ok, const std::string& what)
    {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok    " : "MISS  ") + what);
    }
    void note(const std::string& what) { lines.push_back("      " + what); }
};

std::string fmt(double v, int digits = 6)
{
    return formatNumber(v, digits);
}

bool withinRel(double got, double want, double tol)
{
    return std::fabs(got / want - 1) <= tol;
}

std::string sig(double v, int figures)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", figures, v);
    return buf;
}

BlrcCode bundled(const catalog::KnownSupport& s, std::uint64_t seed = catalog::kFixtureSeed)
{
    return s.build(kWide, seed);
}

Outcome p1Metrics()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const MetricsReport r = buildReport(bundled(catalog::blrc15x10()));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(r.avgRepairSingle == 6.0, "single average " + fmt(r.avgRepairSingle) + " == 6");
    o.expect(r.avgRepairDouble == 9.0, "double average " + fmt(r.avgRepairDouble) + " == 9");
    o.expect(r.minDistance == 4, "minimum distance " + std::to_string(r.minDistance) + " == 4");
    o.expect(r.updateComplexity == 4, "update complexity " + std::to_string(r.updateComplexity) + " == 4");
    o.expect(r.storageOverhead == 0.5, "overhead " + fmt(r.storageOverhead) + " == 0.5");
    o.expect(secs < 10, "report in " + fmt(secs, 3) + " s < 10 s");
    return o;
}

Outcome p1Decodability()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const BlrcCode code = bundled(catalog::blrc15x10());
    std::uint64_t ok4 = 0, ok5 = 0, n4 = 0, n5 = 0;
    for (int f : {4, 5})
        forEachCombination(15, f, [&](std::span<const int> e) {
            const bool ok = isDecodable(code.generator(), e);
            (f == 4 ? n4 : n5) += 1;
            (f == 4 ? ok4 : ok5) += ok ? 1 : 0;
            return true;
        });
    const double p4 = static_cast<double>(ok4) / static_cast<double>(n4);
    const double p5 = static_cast<double>(ok5) / static_cast<double>(n5);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(n4 == 1365 && n5 == 3003, "enumerated " + std::to_string(n4) + " and " + std::to_string(n5) + " patterns");
    o.expect(sig(p4, 6) == "0.992674", "p4 = " + std::to_string(ok4) + "/1365 = " + sig(p4, 6));
    o.expect(sig(p5, 5) == "0.89677", "p5 = " + std::to_string(ok5) + "/3003 = " + sig(p5, 5));
    o.expect(secs < 5, "enumeration in " + fmt(secs, 3) + " s < 5 s");
    return o;
}

Outcome p2Metrics()
{
    Outcome o;
    const MetricsReport r = buildReport(bundled(catalog::blrc16x10()));
    o.expect(r.avgRepairSingle == 5.0, "single average " + fmt(r.avgRepairSingle) + " == 5");
    o.expect(r.avgRepairDouble == 7.0, "double average " + fmt(r.avgRepairDouble) + " == 7");
    const std::vector<std::pair<int, double>> target{{4, 0.9945}, {5, 0.9602}, {6, 0.7966}};
    for (const auto& [f, want] : target)
        o.expect(std::fabs(r.decodability.at(f) - want) <= 0.002,
                 "p" + std::to_string(f) + " " + fmt(r.decodability.at(f)) + " vs " + fmt(want) + " +- 0.002");
    bool stable = true;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto p = decodabilityProfile(bundled(catalog::blrc16x10(), seed), 6);
        for (const auto& [f, want] : target)
            stable = stable && p.at(f) == r.decodability.at(f);
    }
    o.expect(stable, "p4..p6 identical for coefficient seeds 1, 2, 3");
    if (r.avgRepairDouble != 7.0)
        o.note("p4..p6 match, so the support is the published one; the double average is the exact minimum "
               "joint transfer over all " + std::to_string(16 * 15 / 2) + " pairs");
    return o;
}

Outcome p3Metrics()
{
    Outcome o;
    const MetricsReport r = buildReport(bundled(catalog::blrc16x10Light()));
    o.expect(std::fabs(r.avgColumnWeight - 3.333) <= 0.001, "column weight " + fmt(r.avgColumnWeight) + " vs 3.333 +- 0.001");
    o.expect(r.avgRepairSingle == 3.125, "single average " + fmt(r.avgRepairSingle) + " == 3.125");
    o.expect(std::fabs(r.avgRepairDouble - 5.22) <= 0.25, "double average " + fmt(r.avgRepairDouble) + " vs 5.22 +- 0.25");
    return o;
}

Outcome mttdl()
{
    Outcome o;
    const std::vector<std::pair<const catalog::KnownSupport*, double>> blrc{
        {&catalog::blrc15x10(), 3.3647e14}, {&catalog::blrc16x10(), 5.7378e14}, {&catalog::blrc16x10Light(), 7.2338e8}};
    std::vector<MetricsReport> reports;
    for (const auto& [s, want] : blrc)
        reports.push_back(buildReport(bundled(*s), s->label));

    std::optional<UnitConvention> passing;
    for (UnitConvention u : {UnitConvention::Decimal, UnitConvention::Binary}) {
        const auto params = ReliabilityParams::defaults(u);
        bool all = true;
        std::string line = u == UnitConvention::Decimal ? "decimal:" : "binary: ";
        for (std::size_t i = 0; i < blrc.size(); ++i) {
            const double got = computeMttdl(reports[i], params).systemDays;
            const bool ok = withinRel(got, blrc[i].second, 0.05);
            all = all && ok;
            line += " " + blrc[i].first->name + " " + fmt(got, 5) + " (" + (got > blrc[i].second ? "+" : "") +
                    fmt(100 * (got / blrc[i].second - 1), 3) + "%)";
        }
        o.note(line);
        if (all && !passing)
            passing = u;
    }
    o.expect(passing.has_value(), passing ? std::string("P1, P2, P3 within 5% under ") +
                                                (*passing == UnitConvention::Decimal ? "decimal" : "binary") + " units"
                                          : "P1, P2, P3 within 5% under no single unit convention");

    const auto params = ReliabilityParams::defaults(passing.value_or(UnitConvention::Decimal));
    const std::vector<std::pair<ReferenceCode, double>> refs{
        {buildReplication(3), 2.3079e10}, {buildRS(14, 10, kWide), 3.3118e13}, {buildXorbasLRC(kWide), 1.2180e15}};
    for (const auto& [rc, want] : refs) {
        const double got = computeMttdl(rc.report, params).systemDays;
        o.expect(std::fabs(std::log10(got / want)) <= 1.0,
                 rc.label + " " + fmt(got, 5) + " vs " + fmt(want, 5) + " within one order of magnitude");
    }
    return o;
}

Outcome azure()
{
    Outcome o;
    const ReferenceCode rc = buildAzureLRC(kWide);
    o.expect(rc.report.avgRepairSingle == 6.25, "single average " + fmt(rc.report.avgRepairSingle) + " == 6.25");
    return o;
}

Outcome properties()
{
    Outcome o;
    Rng rng(catalog::kFixtureSeed);
    int distanceOk = 0, localityOk = 0, boundOk = 0;
    constexpr int codes = 50;
    for (int t = 0; t < codes; ++t) {
        const BlrcCode code = testing::randomCode(rng, 5, 14, kWide);
        const CodeSpec& s = code.spec();
        const int d = minimumDistance(code);
        if (d == s.w + 1)
            ++distanceOk;
        else
            o.note("[" + std::to_string(s.n) + "," + std::to_string(s.k) + "] w=" + std::to_string(s.w) +
                   " has distance " + std::to_string(d));
        const CircuitIndex index(code.generator());
        bool local = true;
        for (int b = 0; b < s.n; ++b) {
            const auto cost = index.singleCost(b);
            local = local && cost && (*cost == s.l() || *cost == s.l() + 1);
        }
        localityOk += local ? 1 : 0;
        const MetricsReport r = buildReport(code.parity(), 1);
        if (r.distanceBound && d <= *r.distanceBound)
            ++boundOk;
    }
    o.expect(distanceOk == codes, "(a) distance == w+1 on " + std::to_string(distanceOk) + "/50 random codes, n <= 14");
    o.expect(localityOk == codes, "(b) single repair cost in {l, l+1} on " + std::to_string(localityOk) + "/50");
    o.expect(boundOk == codes, "(c) distance bound holds on " + std::to_string(boundOk) + "/50");

    Rng orng(2024);
    int agree = 0, checked = 0;
    for (int t = 0; t < 20; ++t) {
        const BlrcCode code = testing::randomCode(orng, 5, 12);
        const Matrix& g = code.generator();
        const auto og = testing::toOracle(g);
        bool all = true;
        for (int a = 0; a < code.n(); ++a)
            for (int b = a; b < code.n(); ++b) {
                const std::vector<int> erased = a == b ? std::vector<int>{a} : std::vector<int>{a, b};
                if (!isDecodable(g, erased))
                    continue;
                std::uint32_t mask = 0;
                for (int e : erased)
                    mask |= 1u << e;
                ++checked;
                all = all && minimalRepair(g, ErasurePattern(code.n(), erased)).cost ==
                                 oracle::minRepairCost(og, mask, 8, 0x11D);
            }
        agree += all ? 1 : 0;
    }
    o.expect(agree == 20, "(d) minimal repair equals the all-subsets oracle on " + std::to_string(agree) + "/20 codes (" +
                              std::to_string(checked) + " patterns)");
    return o;
}

Outcome search()
{
    Outcome o;
    SearchConfig config;
    config.n = 16;
    config.k = 10;
    config.d = 4;
    const auto start = std::chrono::steady_clock::now();
    const SearchResult a = hillClimb(config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const SearchResult b = hillClimb(config);
    o.expect(a.code.spec().n == 16 && a.code.spec().k == 10 && a.code.spec().w == 3, "valid [16,10] code with w = 3");
    o.expect(minimumDistance(a.code) == 4, "minimum distance " + std::to_string(minimumDistance(a.code)) + " == 4");
    o.expect(a.avgRepairDouble <= 7.5, "double average " + fmt(a.avgRepairDouble) + " <= 7.5 (single " +
                                           fmt(a.avgRepairSingle) + ")");
    o.expect(secs < 300, "search in " + fmt(secs, 3) + " s < 300 s");
    std::ostringstream ta, tb;
    a.trace.writeCsv(ta);
    b.trace.writeCsv(tb);
    o.expect(formatCodeDocument(CodeDocument::from(a.code)) == formatCodeDocument(CodeDocument::from(b.code)) &&
                 ta.str() == tb.str(),
             "rerun with the same seed is bit-identical (code and trace)");
    return o;
}

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

Outcome markov()
{
    Outcome o;
    double worst = 0;
    for (const auto& [a, b, mu] : {std::tuple{1.0, 2.0, 3.0}, std::tuple{15.0 / 1460, 14.0 / 1460, 5625.0},
                                   std::tuple{1e-6, 1e-6, 1e6}}) {
        const double want = (a + b + mu) / (a * b);
        const double got = mttdlStripe(chain({{0, a, 0}, {mu, 0, b}, {0, 0, 0}}, 1));
        worst = std::max(worst, std::fabs(got - want) / want);
    }
    o.expect(worst <= 1e-9, "three-state closed form, worst relative error " + sig(worst, 3));

    const std::vector<std::vector<double>> rates{{0, 1.0, 0, 0, 0},
                                                 {2.0, 0, 0.8, 0.1, 0},
                                                 {0, 1.5, 0, 0, 0.7},
                                                 {0, 0, 0, 0, 0},
                                                 {0, 0, 0, 0, 0}};
    const double exact = mttdlStripe(chain(rates, 2));
    Rng rng(99);
    const int trials = 200000;
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
    o.expect(std::fabs(mean - exact) < 3 * sd, "five-state Monte Carlo " + fmt(mean) + " vs exact " + fmt(exact) +
                                                   " (sigma " + sig(sd, 3) + ")");
    return o;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome roundTrip()
{
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("blrc-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const BlrcCode code = bundled(catalog::blrc15x10());

    Rng rng(10);
    std::string data(10u << 20, '\0');
    for (auto& c : data)
        c = static_cast<char>(rng() & 0xFF);
    std::ofstream(dir / "input.bin", std::ios::binary) << data;

    const fs::path shards = dir / "shards";
    encodeFile(code, dir / "input.bin", shards);
    const fs::path keep = dir / "keep";
    fs::create_directories(keep);
    for (int i = 0; i < 15; ++i)
        fs::copy_file(shards / shardFileName(i), keep / shardFileName(i));

    auto restore = [&] {
        for (int i = 0; i < 15; ++i)
            fs::copy_file(keep / shardFileName(i), shards / shardFileName(i), fs::copy_options::overwrite_existing);
    };

    std::vector<std::vector<int>> triples{{0, 1, 2}, {12, 13, 14}, {0, 10, 11}};
    for (int t = 0; t < 5; ++t) {
        std::vector<int> pick;
        while (pick.size() < 3) {
            const int x = static_cast<int>(uniformBelow(rng, 15));
            if (std::find(pick.begin(), pick.end(), x) == pick.end())
                pick.push_back(x);
        }
        triples.push_back(pick);
    }
    int identical = 0;
    for (const auto& lost : triples) {
        restore();
        for (int i : lost)
            fs::remove(shards / shardFileName(i));
        decodeFile(code, shards, dir / "output.bin");
        identical += slurp(dir / "output.bin") == data ? 1 : 0;
    }
    o.expect(identical == static_cast<int>(triples.size()),
             "10 MiB decoded byte-identical after deleting 3 shards, " + std::to_string(identical) + "/" +
                 std::to_string(triples.size()) + " loss patterns");

    int sixHelpers = 0, rebuilt = 0;
    for (int i = 0; i < 15; ++i) {
        restore();
        fs::remove(shards / shardFileName(i));
        const RepairSummary rep = repairShards(code, shards, {i});
        sixHelpers += rep.read.size() == 6 ? 1 : 0;
        rebuilt += slurp(shards / shardFileName(i)) == slurp(keep / shardFileName(i)) ? 1 : 0;
    }
    o.expect(sixHelpers == 15, "single-shard repair reads exactly 6 helper shards for " + std::to_string(sixHelpers) +
                                   "/15 shards");
    o.expect(rebuilt == 15, "repaired shard byte-identical for " + std::to_string(rebuilt) + "/15 shards");
    fs::remove_all(dir);
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"P1 metrics", p1Metrics},
        {"P1 decodability", p1Decodability},
        {"P2 metrics", p2Metrics},
        {"P3 metrics", p3Metrics},
        {"MTTDL", mttdl},
        {"Azure LRC single-failure average", azure},
        {"property suites", properties},
        {"search (16,10,4)", search},
        {"Markov solver", markov},
        {"file round trip", roundTrip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("threw: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << '\n';
        for (const auto& line : o.lines)
            std::cout << "        " << line << '\n';
        std::cout.flush();
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
    return failed;
}
