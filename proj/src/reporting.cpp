#include "blrc/reporting.hpp"

#include "blrc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace blrc {

using nlohmann::json;

MttdlResult computeMttdl(const MetricsReport& report, const ReliabilityParams& params)
{
    MttdlResult r;
    r.units = params.units;
    r.stripeDays = mttdlStripe(buildModel(report, params));
    r.stripes = params.stripeCount(report.n);
    r.systemDays = mttdlSystem(r.stripeDays, report.n, params);
    return r;
}

ReliabilityParams parseParams(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("reliability parameters: ") + e.what());
    }
    if (!j.is_object())
        throw FormatError("reliability parameters must be a JSON object");
    static const char* known[] = {"C", "N", "B", "gamma", "mttf", "units"};
    for (const auto& [key, value] : j.items())
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw FormatError("unknown reliability parameter '" + key + "'");
    auto num = [&j](const char* key, double fallback) {
        if (!j.contains(key))
            return fallback;
        if (!j[key].is_number())
            throw FormatError(std::string("reliability parameter '") + key + "' must be a number");
        return j[key].get<double>();
    };
    UnitConvention units = UnitConvention::Decimal;
    if (j.contains("units")) {
        if (!j["units"].is_string())
            throw FormatError("'units' must be \"decimal\" or \"binary\"");
        try {
            units = parseUnitConvention(j["units"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    try {
        return ReliabilityParams::fromHumanUnits(num("C", 30), num("N", 3000), num("B", 256), num("gamma", 1),
                                                 num("mttf", 4), units);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

ReliabilityParams readParams(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    return parseParams({std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()});
}

std::string reportJson(const MetricsReport& report, const std::optional<MttdlResult>& mttdl,
                       const std::vector<std::string>& notes)
{
    json j;
    j["label"] = report.label;
    j["n_blocks"] = report.n;
    j["k_blocks"] = report.k;
    j["storage_overhead_ratio"] = report.storageOverhead;
    j["avg_repair_single_blocks"] = report.avgRepairSingle;
    j["avg_repair_double_blocks"] = report.avgRepairDouble;
    j["undecodable_pairs_count"] = report.undecodablePairs;
    j["avg_column_weight_blocks"] = report.avgColumnWeight;
    j["update_complexity_writes"] = report.updateComplexity;
    j["min_distance_blocks"] = report.minDistance;
    if (report.distanceBound)
        j["distance_bound_blocks"] = *report.distanceBound;
    json p = json::object();
    for (const auto& [f, v] : report.decodability)
        p[std::to_string(f)] = v;
    j["decodability_ratio"] = p;
    if (mttdl) {
        j["mttdl_stripe_days"] = mttdl->stripeDays;
        j["mttdl_system_days"] = mttdl->systemDays;
        j["stripes_count"] = mttdl->stripes;
        j["units"] = toString(mttdl->units);
    }
    if (!notes.empty())
        j["notes"] = notes;
    return j.dump(2) + "\n";
}

std::string Table::text() const
{
    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&width](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    measure(header);
    for (const auto& r : rows)
        measure(r);
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string cell = i < row.size() ? row[i] : "";
            out << cell;
            if (i + 1 < width.size())
                out << std::string(width[i] - cell.size() + 2, ' ');
        }
        out << '\n';
    };
    line(header);
    std::size_t total = 0;
    for (auto w : width)
        total += w + 2;
    out << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
    for (const auto& r : rows)
        line(r);
    return out.str();
}

std::string Table::csv() const
{
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << quote(row[i]);
        out << '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
    return out.str();
}

std::string formatNumber(double v, int digits)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    if (v == std::round(v) && std::fabs(v) < 1e7)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace blrc
