#pragma once

#include "blrc/code.hpp"

#include <string>
#include <vector>

namespace blrc::catalog {

// Published example supports. Columns are 0-based parity indices, so column
// c corresponds to block k + c + 1 in 1-based numbering.
struct KnownSupport {
    std::string name;
    std::string label;
    int n;
    int k;
    int w;
    std::vector<std::vector<int>> rows;

    CodeSpec spec(const Field& field = Field()) const { return {n, k, w, field}; }
    SupportPattern support() const { return SupportPattern::fromRows(n - k, rows); }
    // Support filled by assignCoefficients with the given seed.
    BlrcCode build(const Field& field, std::uint64_t seed) const { return assignCoefficients(support(), spec(field), seed); }
};

// [15,10], w = 3, every column of weight 6.
const KnownSupport& blrc15x10();
// [16,10], w = 3, every column of weight 5.
const KnownSupport& blrc16x10();
// [16,10], w = 2, columns of weight 3 or 4.
const KnownSupport& blrc16x10Light();
// [13,8], w = 2, the small worked example.
const KnownSupport& blrc13x8();

const std::vector<const KnownSupport*>& all();
const KnownSupport* find(const std::string& name);

// Seed and field of the bundled code files. Over GF(2^8) random coefficients
// still hit accidental singular minors often enough to move p_f in the third
// digit; GF(2^16) makes that negligible.
inline constexpr std::uint64_t kFixtureSeed = 2016;
inline constexpr FieldSpec kFixtureField{16, 0x1100B};

} // namespace blrc::catalog
