#include "blrc/catalog.hpp"

namespace blrc::catalog {

namespace {

// 1-based block numbers as printed, converted to 0-based parity columns.
std::vector<std::vector<int>> fromBlocks(int k, std::vector<std::vector<int>> rows)
{
    for (auto& row : rows)
        for (auto& b : row)
            b -= k + 1;
    return rows;
}

} // namespace

const KnownSupport& blrc15x10()
{
    static const KnownSupport s{"p1", "[15,10] BLRC, l=6, w=3", 15, 10, 3,
                                fromBlocks(10, {{11, 12, 14},
                                                {11, 14, 15},
                                                {11, 13, 14},
                                                {11, 12, 15},
                                                {11, 13, 15},
                                                {11, 12, 13},
                                                {12, 13, 15},
                                                {13, 14, 15},
                                                {12, 13, 14},
                                                {12, 14, 15}})};
    return s;
}

const KnownSupport& blrc16x10()
{
    static const KnownSupport s{"p2", "[16,10] BLRC, l=5, w=3", 16, 10, 3,
                                fromBlocks(10, {{11, 15, 16},
                                                {12, 13, 16},
                                                {12, 15, 16},
                                                {13, 14, 15},
                                                {11, 14, 16},
                                                {12, 13, 14},
                                                {11, 12, 14},
                                                {11, 14, 15},
                                                {13, 15, 16},
                                                {11, 12, 13}})};
    return s;
}

const KnownSupport& blrc16x10Light()
{
    static const KnownSupport s{"p3", "[16,10] BLRC, l=3 or 4, w=2", 16, 10, 2,
                                fromBlocks(10, {{11, 16},
                                                {14, 15},
                                                {14, 16},
                                                {15, 16},
                                                {11, 14},
                                                {12, 15},
                                                {11, 12},
                                                {11, 13},
                                                {13, 15},
                                                {12, 13}})};
    return s;
}

const KnownSupport& blrc13x8()
{
    static const KnownSupport s{"example13", "[13,8] BLRC, l=3 or 4, w=2", 13, 8, 2,
                                fromBlocks(8, {{11, 12},
                                               {9, 12},
                                               {9, 11},
                                               {11, 13},
                                               {12, 13},
                                               {10, 13},
                                               {10, 11},
                                               {9, 10}})};
    return s;
}

const std::vector<const KnownSupport*>& all()
{
    static const std::vector<const KnownSupport*> v{&blrc15x10(), &blrc16x10(), &blrc16x10Light(), &blrc13x8()};
    return v;
}

const KnownSupport* find(const std::string& name)
{
    for (const auto* s : all())
        if (s->name == name)
            return s;
    return nullptr;
}

} // namespace blrc::catalog
