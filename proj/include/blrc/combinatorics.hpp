#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace blrc {

std::uint64_t binomial(int n, int k);

// Visits every size-k subset of {0..n-1} in lexicographic order. The visitor
// returns false to stop early; the function returns false if it was stopped.
template <class Visitor>
bool forEachCombination(int n, int k, Visitor&& visit)
{
    if (k < 0 || k > n)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(std::span<const int>(idx)))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace blrc
