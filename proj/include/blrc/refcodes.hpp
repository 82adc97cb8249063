#pragma once

#include "blrc/analysis.hpp"
#include "blrc/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blrc {

/// A comparison scheme. When `parity` is present every metric in `report`
/// was computed from it; metric-level overrides are listed in `notes`.
struct ReferenceCode {
    std::string label;
    std::optional<Matrix> parity;
    MetricsReport report;
    std::vector<std::string> notes;
};

// Systematic MDS code with a Cauchy parity block 1 / (x_i + y_j).
// Throws std::invalid_argument when the field has fewer than n + 1 elements.
Matrix cauchyParity(const Field& field, int k, int r);

ReferenceCode buildRS(int n, int k, const Field& field = Field());

// [16,10]: local parities over data 1-5 and 6-10, four global Cauchy parities.
ReferenceCode buildAzureLRC(const Field& field = Field());

// [16,10]: RS(14,10) plus two stored local parities whose coefficients sum,
// per data block, to the RS coefficients, so the implied third local parity
// equals the sum of the four RS parities.
ReferenceCode buildXorbasLRC(const Field& field = Field());

// `factor` copies of each block; metrics are closed form.
ReferenceCode buildReplication(int factor);

} // namespace blrc
