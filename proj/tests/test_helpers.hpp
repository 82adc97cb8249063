#pragma once

#include "blrc/code.hpp"
#include "blrc/random.hpp"
#include "blrc/search.hpp"
#include "oracle.hpp"

#include <optional>

namespace testing {

inline oracle::Mat toOracle(const blrc::Matrix& m)
{
    oracle::Mat out(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

// Random valid parameters with nMin <= n <= nMax and a random balanced code
// on them; draws again when coefficient assignment fails.
inline blrc::BlrcCode randomCode(blrc::Rng& rng, int nMin, int nMax, const blrc::Field& field = blrc::Field())
{
    while (true) {
        const int n = nMin + static_cast<int>(blrc::uniformBelow(rng, static_cast<std::uint64_t>(nMax - nMin + 1)));
        const int k = 2 + static_cast<int>(blrc::uniformBelow(rng, static_cast<std::uint64_t>(n - 2)));
        const int r = n - k;
        if (r < 1)
            continue;
        const int w = 1 + static_cast<int>(blrc::uniformBelow(rng, static_cast<std::uint64_t>(std::min(r, k - 1))));
        const blrc::CodeSpec spec{n, k, w, field};
        try {
            spec.check();
            return blrc::assignCoefficients(blrc::randomSupport(spec, rng()), spec, rng());
        } catch (const std::exception&) {
            continue;
        }
    }
}

} // namespace testing
