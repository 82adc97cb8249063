#include "blrc/errors.hpp"

namespace blrc {

namespace {

std::string describePattern(const std::vector<int>& pattern)
{
    std::string s = "undecodable erasure pattern {";
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(pattern[i] + 1);
    }
    return s + "}";
}

} // namespace

Undecodable::Undecodable(std::vector<int> pattern)
    : Error(describePattern(pattern)), pattern_(std::move(pattern))
{
}

} // namespace blrc
