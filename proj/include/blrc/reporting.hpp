#pragma once

#include "blrc/analysis.hpp"
#include "blrc/reliability.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace blrc {

struct MttdlResult {
    double stripeDays = 0;
    double systemDays = 0;
    double stripes = 0;
    UnitConvention units = UnitConvention::Decimal;
};

MttdlResult computeMttdl(const MetricsReport& report, const ReliabilityParams& params);

// Reads {"C": PB, "N": nodes, "B": MB, "gamma": Gbps, "mttf": years,
// "units": "decimal" | "binary"}. Missing keys take the defaults. Throws
// FormatError on malformed input.
ReliabilityParams parseParams(const std::string& json);
ReliabilityParams readParams(const std::filesystem::path& path);

// JSON document with unit-suffixed keys (..._blocks, ..._ratio, ..._days).
std::string reportJson(const MetricsReport& report, const std::optional<MttdlResult>& mttdl = std::nullopt,
                       const std::vector<std::string>& notes = {});

/// Rows of strings rendered as an aligned text table or as CSV.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string text() const;
    std::string csv() const;
};

// Shortest decimal form: integers without a fraction, otherwise up to
// `digits` significant digits.
std::string formatNumber(double v, int digits = 6);

} // namespace blrc
