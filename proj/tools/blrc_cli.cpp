#include "blrc/analysis.hpp"
#include "blrc/catalog.hpp"
#include "blrc/codefile.hpp"
#include "blrc/errors.hpp"
#include "blrc/refcodes.hpp"
#include "blrc/reliability.hpp"
#include "blrc/reporting.hpp"
#include "blrc/search.hpp"
#include "blrc/shards.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace blrc;
namespace fs = std::filesystem;

namespace {

// Exit status for a code that fails validation or an unrecoverable erasure.
constexpr int kInvalid = 2;

FieldSpec parseFieldPoly(const std::string& text)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 4 || v >= (1ul << 17))
        throw std::invalid_argument("--field-poly expects a hex polynomial of degree 2..16, e.g. 0x11D");
    return FieldSpec{static_cast<int>(std::bit_width(v)) - 1, static_cast<std::uint32_t>(v)};
}

Field fieldFrom(const std::string& poly, FieldSpec fallback)
{
    return Field(poly.empty() ? fallback : parseFieldPoly(poly));
}

std::string blockList(const std::vector<int>& zeroBased)
{
    std::string s;
    for (int b : zeroBased)
        s += (s.empty() ? "" : " ") + std::to_string(b + 1);
    return s.empty() ? "-" : s;
}

std::vector<int> parseBlockList(const std::string& text, int n)
{
    std::vector<int> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty())
            continue;
        const int b = std::stoi(item);
        if (b < 1 || b > n)
            throw std::invalid_argument("block " + item + " is outside 1.." + std::to_string(n));
        out.push_back(b - 1);
    }
    return out;
}

BlrcCode loadCode(const std::string& path)
{
    return readCodeDocument(fs::path(path)).toCode();
}

ReliabilityParams paramsFrom(const std::string& path, const std::string& units)
{
    ReliabilityParams p = path.empty() ? ReliabilityParams::defaults() : readParams(path);
    if (!units.empty() && parseUnitConvention(units) != p.units) {
        // Re-derive the base units from the same human-scale numbers.
        const bool wasDecimal = p.units == UnitConvention::Decimal;
        const double pb = p.totalBytes / (wasDecimal ? 1e15 : std::ldexp(1.0, 50));
        const double mb = p.blockBytes / (wasDecimal ? 1e6 : std::ldexp(1.0, 20));
        const double gbps = p.repairBitsPerSec / (wasDecimal ? 1e9 : std::ldexp(1.0, 30));
        p = ReliabilityParams::fromHumanUnits(pb, p.nodes, mb, gbps, p.mttfDays / 365.0, parseUnitConvention(units));
    }
    return p;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text))
        throw FormatError("cannot write " + out);
}

Table reportTable(const MetricsReport& r, const std::optional<MttdlResult>& m)
{
    Table t{{"metric", "value"}, {}};
    auto row = [&t](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
    row("code", r.label);
    row("n, k", std::to_string(r.n) + ", " + std::to_string(r.k));
    row("storage overhead (ratio)", formatNumber(r.storageOverhead));
    row("avg repair, single failure (blocks)", formatNumber(r.avgRepairSingle));
    row("avg repair, double failure (blocks)", formatNumber(r.avgRepairDouble));
    row("avg column weight (blocks)", formatNumber(r.avgColumnWeight));
    row("update complexity (writes)", std::to_string(r.updateComplexity));
    row("minimum distance (blocks)", std::to_string(r.minDistance));
    if (r.distanceBound)
        row("distance bound (blocks)", std::to_string(*r.distanceBound));
    for (const auto& [f, p] : r.decodability)
        row("p_" + std::to_string(f), formatNumber(p));
    if (m) {
        row("MTTDL per stripe (days)", formatNumber(m->stripeDays, 5));
        row("MTTDL system (days)", formatNumber(m->systemDays, 5));
        row("units", toString(m->units));
    }
    return t;
}

struct CompareRow {
    ReferenceCode code;
    std::optional<Matrix> generator;
};

std::vector<CompareRow> comparisonSet(const Field& field, std::uint64_t seed)
{
    std::vector<CompareRow> rows;
    auto add = [&rows](ReferenceCode rc) {
        std::optional<Matrix> g;
        if (rc.parity)
            g = systematicGenerator(*rc.parity);
        rows.push_back({std::move(rc), std::move(g)});
    };
    add(buildReplication(3));
    add(buildRS(14, 10, field));
    add(buildXorbasLRC(field));
    add(buildAzureLRC(field));
    for (const auto* s : {&catalog::blrc15x10(), &catalog::blrc16x10(), &catalog::blrc16x10Light()}) {
        const BlrcCode code = s->build(field, seed);
        ReferenceCode rc;
        rc.label = s->label;
        rc.parity = code.parity();
        rc.report = buildReport(code, s->label);
        add(std::move(rc));
    }
    return rows;
}

int runSearch(const SearchConfig& cfg, const std::string& out, const std::string& tracePath)
{
    const SearchResult res = hillClimb(cfg);
    std::ostringstream prov;
    prov << "seed=" << cfg.seed << " max_iterations=" << cfg.maxIterations << " patience=" << cfg.patience
         << " restarts=" << cfg.restarts << " restart=" << res.restart;
    emit(formatCodeDocument(CodeDocument::from(res.code, prov.str())), out);
    if (!tracePath.empty()) {
        std::ostringstream csv;
        res.trace.writeCsv(csv);
        emit(csv.str(), tracePath);
    }
    std::cerr << "search: [" << cfg.n << "," << cfg.k << "] d=" << cfg.d << " double "
              << formatNumber(res.avgRepairDouble) << " single " << formatNumber(res.avgRepairSingle)
              << " blocks (restart " << res.restart << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Balanced locally repairable codes: construction, analysis, reliability and file coding"};
    app.require_subcommand(1);

    // search
    SearchConfig cfg;
    std::string fieldPoly, out, tracePath;
    auto* search = app.add_subcommand("search", "Hill-climb for a code with low double-failure repair bandwidth");
    search->add_option("--n", cfg.n, "Code length")->required();
    search->add_option("--k", cfg.k, "Data blocks")->required();
    search->add_option("--d", cfg.d, "Minimum distance (row weight d-1)")->required();
    search->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    search->add_option("--field-poly", fieldPoly, "Reduction polynomial in hex (default 0x11D)");
    search->add_option("--max-iterations", cfg.maxIterations, "Proposals per restart")->capture_default_str();
    search->add_option("--patience", cfg.patience, "Rejected proposals before a restart stops")->capture_default_str();
    search->add_option("--restarts", cfg.restarts, "Independent restarts")->capture_default_str();
    search->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
    search->add_option("--out", out, "Code file to write (default stdout)");
    search->add_option("--trace", tracePath, "CSV file for the search trace");

    // analyze
    std::string codePath, paramsPath, units, format = "json";
    int fMax = 0;
    auto* analyze = app.add_subcommand("analyze", "Metrics report for a code file");
    analyze->add_option("code", codePath, "Code file")->required();
    analyze->add_option("--fmax", fMax, "Largest failure count for decodability (default max(w+3, n-k))");
    analyze->add_option("--params", paramsPath, "Reliability parameters (JSON); adds MTTDL");
    analyze->add_option("--units", units, "Override the unit convention")->check(CLI::IsMember({"decimal", "binary"}));
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    analyze->add_option("--out", out, "Output file (default stdout)");

    // encode / decode / repair
    std::string input, shardDir, erase;
    auto* encode = app.add_subcommand("encode", "Split a file into n shard files");
    encode->add_option("code", codePath, "Code file")->required();
    encode->add_option("input", input, "File to encode")->required();
    encode->add_option("--out", shardDir, "Shard directory")->required();

    auto* decode = app.add_subcommand("decode", "Rebuild the original file from the shards present");
    decode->add_option("code", codePath, "Code file")->required();
    decode->add_option("shards", shardDir, "Shard directory")->required();
    decode->add_option("--out", out, "Recovered file")->required();

    auto* repair = app.add_subcommand("repair", "Recreate lost shards from a minimal helper set");
    repair->add_option("code", codePath, "Code file")->required();
    repair->add_option("shards", shardDir, "Shard directory")->required();
    repair->add_option("--erase", erase, "Comma-separated 1-based blocks to rebuild (default: all absent shards)");

    // mttdl
    auto* mttdl = app.add_subcommand("mttdl", "Mean time to data loss of a code under the Markov model");
    mttdl->add_option("code", codePath, "Code file")->required();
    mttdl->add_option("--params", paramsPath, "Reliability parameters (JSON)");
    mttdl->add_option("--units", units, "Override the unit convention")->check(CLI::IsMember({"decimal", "binary"}));
    mttdl->add_option("--fmax", fMax, "Largest failure count for decodability");

    // compare
    std::string fig2Path;
    std::uint64_t seed = catalog::kFixtureSeed;
    std::string compareFormat = "table";
    auto* compare = app.add_subcommand("compare", "Comparison table and per-failure-count repair bandwidth");
    compare->add_option("--params", paramsPath, "Reliability parameters (JSON)");
    compare->add_option("--units", units, "Override the unit convention")->check(CLI::IsMember({"decimal", "binary"}));
    compare->add_option("--format", compareFormat, "Table format")->check(CLI::IsMember({"table", "csv"}))->capture_default_str();
    compare->add_option("--field-poly", fieldPoly, "Reduction polynomial in hex (default 0x1100B)");
    compare->add_option("--seed", seed, "Coefficient seed for the BLRC rows")->capture_default_str();
    compare->add_option("--fig2", fig2Path, "CSV of average repair bandwidth for 1-4 failures ('-' = stdout)");
    compare->add_option("--out", out, "Table output file (default stdout)");

    // catalog
    std::string name;
    auto* cat = app.add_subcommand("catalog", "List the bundled supports or write one as a code file");
    cat->add_option("name", name, "Support name (p1, p2, p3, example13)");
    cat->add_option("--seed", seed, "Coefficient seed")->capture_default_str();
    cat->add_option("--field-poly", fieldPoly, "Reduction polynomial in hex (default 0x1100B)");
    cat->add_option("--out", out, "Code file to write (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*search) {
            cfg.field = fieldFrom(fieldPoly, FieldSpec{});
            return runSearch(cfg, out, tracePath);
        }
        if (*analyze) {
            const CodeDocument doc = readCodeDocument(fs::path(codePath));
            const ValidationReport v = validate(doc.parity, doc.spec);
            if (!v.ok()) {
                std::cerr << "error: " << codePath << " is not a valid code\n" << v.summary();
                return kInvalid;
            }
            const BlrcCode code = doc.toCode();
            const std::string label = fs::path(codePath).stem().string();
            MetricsReport r = fMax > 0 ? buildReport(code.parity(), fMax, label) : buildReport(code, label);
            std::optional<MttdlResult> m;
            if (!paramsPath.empty() || !units.empty())
                m = computeMttdl(r, paramsFrom(paramsPath, units));
            emit(format == "json" ? reportJson(r, m) : reportTable(r, m).text(), out);
            return 0;
        }
        if (*encode) {
            const BlrcCode code = loadCode(codePath);
            const EncodeSummary s = encodeFile(code, input, shardDir);
            std::cout << "encoded " << s.originalLength << " bytes into " << s.written.size() << " shards of "
                      << s.stripes << " stripes in " << shardDir << "\n";
            return 0;
        }
        if (*decode) {
            const BlrcCode code = loadCode(codePath);
            const DecodeSummary s = decodeFile(code, shardDir, out);
            std::cout << "decoded " << s.bytes << " bytes; missing shards: " << blockList(s.missing)
                      << "; read shards: " << blockList(s.used) << "\n";
            return 0;
        }
        if (*repair) {
            const BlrcCode code = loadCode(codePath);
            const RepairSummary s = repairShards(code, shardDir, parseBlockList(erase, code.n()));
            std::cout << "rebuilt: " << blockList(s.plan.erased.indices()) << "\n";
            std::cout << "helpers: " << blockList(s.plan.helpers) << "\n";
            std::cout << "blocks read: " << s.read.size() << "\n";
            return 0;
        }
        if (*mttdl) {
            const BlrcCode code = loadCode(codePath);
            const MetricsReport r = fMax > 0 ? buildReport(code.parity(), fMax) : buildReport(code);
            const MttdlResult m = computeMttdl(r, paramsFrom(paramsPath, units));
            std::cout << "stripe MTTDL (days): " << formatNumber(m.stripeDays, 6) << "\n";
            std::cout << "stripes: " << formatNumber(m.stripes, 8) << "\n";
            std::cout << "system MTTDL (days): " << formatNumber(m.systemDays, 6) << "\n";
            std::cout << "units: " << toString(m.units) << "\n";
            return 0;
        }
        if (*compare) {
            const Field field = fieldFrom(fieldPoly, catalog::kFixtureField);
            const ReliabilityParams params = paramsFrom(paramsPath, units);
            const auto rows = comparisonSet(field, seed);
            Table t{{"code", "storage overhead", "single repair", "double repair", "MTTDL (days)", "update complexity"},
                    {}};
            std::vector<std::string> notes;
            for (const auto& row : rows) {
                const auto& r = row.code.report;
                if (r.label == buildAzureLRC(field).label)
                    continue; // figure only, not a table row
                t.rows.push_back({r.label, formatNumber(r.storageOverhead, 3) + "x",
                                  formatNumber(r.avgRepairSingle, 4) + "x", formatNumber(r.avgRepairDouble, 4) + "x",
                                  formatNumber(computeMttdl(r, params).systemDays, 5),
                                  std::to_string(r.updateComplexity)});
                for (const auto& n : row.code.notes)
                    notes.push_back(r.label + ": " + n);
            }
            std::string text = compareFormat == "csv" ? t.csv() : t.text();
            if (compareFormat == "table") {
                text += "units: " + std::string(toString(params.units)) + "\n";
                for (const auto& n : notes)
                    text += "note: " + n + "\n";
            }
            emit(text, out);

            if (!fig2Path.empty()) {
                Table fig{{"failures"}, {}};
                for (const auto& row : rows)
                    if (row.generator)
                        fig.header.push_back(row.code.label);
                for (int f = 1; f <= 4; ++f) {
                    std::vector<std::string> line{std::to_string(f)};
                    for (const auto& row : rows) {
                        if (!row.generator)
                            continue;
                        const CircuitIndex index(*row.generator);
                        line.push_back(formatNumber(averageRepairBandwidth(index, *row.generator, f).average, 6));
                    }
                    fig.rows.push_back(line);
                }
                emit(fig.csv(), fig2Path);
            }
            return 0;
        }
        if (*cat) {
            if (name.empty()) {
                for (const auto* s : catalog::all())
                    std::cout << s->name << "  " << s->label << "\n";
                return 0;
            }
            const auto* s = catalog::find(name);
            if (!s)
                throw std::invalid_argument("unknown support '" + name + "'");
            const Field field = fieldFrom(fieldPoly, catalog::kFixtureField);
            const BlrcCode code = s->build(field, seed);
            emit(formatCodeDocument(CodeDocument::from(code, "support=" + s->name + " seed=" + std::to_string(seed))),
                 out);
            return 0;
        }
    } catch (const Undecodable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const ConstructionFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
