#include "blrc/analysis.hpp"

#include "blrc/basis.hpp"
#include "blrc/combinatorics.hpp"
#include "blrc/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace blrc {

ErasurePattern::ErasurePattern(int n, std::vector<int> indices)
    : n_(n), idx_(std::move(indices))
{
    std::sort(idx_.begin(), idx_.end());
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 0 || idx_[i] >= n)
            throw std::invalid_argument("erased index " + std::to_string(idx_[i] + 1) + " outside 1.." +
                                        std::to_string(n));
        if (i && idx_[i] == idx_[i - 1])
            throw std::invalid_argument("duplicate erased index " + std::to_string(idx_[i] + 1));
    }
}

bool ErasurePattern::contains(int block) const
{
    return std::binary_search(idx_.begin(), idx_.end(), block);
}

std::vector<int> ErasurePattern::survivors() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_) - idx_.size());
    for (int b = 0; b < n_; ++b)
        if (!contains(b))
            out.push_back(b);
    return out;
}

namespace {

std::vector<std::vector<Symbol>> columnsOf(const Matrix& g)
{
    std::vector<std::vector<Symbol>> cols(g.cols());
    for (std::size_t c = 0; c < g.cols(); ++c)
        cols[c] = g.column(c);
    return cols;
}

bool covers(VectorBasis& basis, const std::vector<std::vector<Symbol>>& cols, std::span<const int> helpers,
            const std::vector<int>& erased)
{
    basis.clear();
    for (int h : helpers)
        basis.insert(cols[static_cast<std::size_t>(h)]);
    return std::all_of(erased.begin(), erased.end(),
                       [&](int e) { return basis.contains(cols[static_cast<std::size_t>(e)]); });
}

void requireSystematicShape(const Matrix& generator, const ErasurePattern& erased)
{
    if (erased.n() != static_cast<int>(generator.cols()))
        throw std::invalid_argument("erasure pattern length does not match the code");
}

} // namespace

RepairPlan minimalRepair(const Matrix& generator, const ErasurePattern& erased)
{
    requireSystematicShape(generator, erased);
    if (!isDecodable(generator, erased.indices()))
        throw Undecodable(erased.indices());

    RepairPlan plan;
    plan.erased = erased;
    if (erased.empty())
        return plan;

    const auto cols = columnsOf(generator);
    const std::vector<int> survivors = erased.survivors();
    const int m = static_cast<int>(survivors.size());
    VectorBasis basis(generator.field(), generator.rows());

    if (erased.n() <= kExhaustiveRepairLimit) {
        std::vector<int> pick;
        for (int size = 0; size <= m; ++size) {
            const bool exhausted = forEachCombination(m, size, [&](std::span<const int> sel) {
                pick.resize(sel.size());
                for (std::size_t i = 0; i < sel.size(); ++i)
                    pick[i] = survivors[static_cast<std::size_t>(sel[i])];
                return !covers(basis, cols, pick, erased.indices());
            });
            if (!exhausted) {
                plan.helpers = pick;
                plan.cost = size;
                return plan;
            }
        }
        throw Undecodable(erased.indices()); // unreachable for decodable patterns
    }

    // Greedy: drop survivors from the top while the rest still cover.
    std::vector<int> helpers = survivors;
    for (int i = m - 1; i >= 0; --i) {
        std::vector<int> trial = helpers;
        trial.erase(std::find(trial.begin(), trial.end(), survivors[static_cast<std::size_t>(i)]));
        if (covers(basis, cols, trial, erased.indices()))
            helpers = std::move(trial);
    }
    plan.helpers = std::move(helpers);
    plan.cost = static_cast<int>(plan.helpers.size());
    plan.certifiedMinimal = false;
    return plan;
}

RepairPlan minimalRepair(const BlrcCode& code, const ErasurePattern& erased)
{
    return minimalRepair(code.generator(), erased);
}

std::vector<std::vector<Symbol>> repairCoefficients(const Matrix& generator, const RepairPlan& plan)
{
    const Matrix helpers = generator.selectColumns(plan.helpers);
    std::vector<std::vector<Symbol>> out;
    for (int e : plan.erased.indices())
        out.push_back(solveAny(helpers, generator.column(static_cast<std::size_t>(e))));
    return out;
}

namespace {

// Nonzero vector orthogonal to the given r-1 independent vectors of length r,
// or empty if they are dependent. `vecs` holds them row-major.
std::vector<Symbol> orthogonalComplement(const Field& f, std::vector<Symbol> vecs, std::size_t count,
                                         std::size_t dim)
{
    // Reduced row echelon form, then read the single free column.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < count; ++col) {
        std::size_t p = row;
        while (p < count && vecs[p * dim + col] == 0)
            ++p;
        if (p == count)
            continue;
        if (p != row)
            for (std::size_t c = 0; c < dim; ++c)
                std::swap(vecs[p * dim + c], vecs[row * dim + c]);
        const Symbol s = f.inv(vecs[row * dim + col]);
        for (std::size_t c = 0; c < dim; ++c)
            vecs[row * dim + c] = f.mul(vecs[row * dim + c], s);
        for (std::size_t r = 0; r < count; ++r) {
            if (r == row || vecs[r * dim + col] == 0)
                continue;
            const Symbol factor = vecs[r * dim + col];
            for (std::size_t c = 0; c < dim; ++c)
                vecs[r * dim + c] ^= f.mul(factor, vecs[row * dim + c]);
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() != count)
        return {};
    std::size_t freeCol = 0;
    while (freeCol < dim && std::find(pivots.begin(), pivots.end(), freeCol) != pivots.end())
        ++freeCol;
    std::vector<Symbol> y(dim, 0);
    y[freeCol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        y[pivots[i]] = vecs[i * dim + freeCol];
    return y;
}

} // namespace

CircuitIndex::CircuitIndex(const Matrix& generator)
    : n_(static_cast<int>(generator.cols()))
{
    if (n_ > 32)
        throw std::invalid_argument("circuit index supports at most 32 blocks");
    const Field& f = generator.field();

    // Circuits are the minimal supports of vectors x with G x = 0. For a dual
    // of dimension t, each one is the support of the unique (up to scale)
    // dual word vanishing on some t-1 coordinates with independent dual columns.
    const Matrix dual = leftNullspace(generator.transpose()); // t x n
    const std::size_t t = dual.rows();
    std::unordered_set<std::uint32_t> seen;
    if (t > 0) {
        std::vector<Symbol> vecs;
        forEachCombination(n_, static_cast<int>(t) - 1, [&](std::span<const int> zeros) {
            vecs.assign(zeros.size() * t, 0);
            for (std::size_t i = 0; i < zeros.size(); ++i)
                for (std::size_t j = 0; j < t; ++j)
                    vecs[i * t + j] = dual(j, static_cast<std::size_t>(zeros[i]));
            const std::vector<Symbol> y = orthogonalComplement(f, vecs, zeros.size(), t);
            if (y.empty())
                return true;
            std::uint32_t mask = 0;
            for (int c = 0; c < n_; ++c) {
                Symbol acc = 0;
                for (std::size_t j = 0; j < t; ++j)
                    acc ^= f.mul(y[j], dual(j, static_cast<std::size_t>(c)));
                if (acc != 0)
                    mask |= 1u << c;
            }
            if (mask != 0)
                seen.insert(mask);
            return true;
        });
    }
    circuits_.assign(seen.begin(), seen.end());
    std::sort(circuits_.begin(), circuits_.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    byBlock_.resize(static_cast<std::size_t>(n_));
    for (std::uint32_t c : circuits_)
        for (int b = 0; b < n_; ++b)
            if (c & (1u << b))
                byBlock_[static_cast<std::size_t>(b)].push_back(c);
}

namespace {

struct CoverSearch {
    std::vector<const std::vector<std::uint32_t>*> lists;
    std::uint32_t erased = 0;
    int best = std::numeric_limits<int>::max();

    void run(std::size_t i, std::uint32_t helpers)
    {
        if (i == lists.size()) {
            best = std::min(best, std::popcount(helpers));
            return;
        }
        for (std::uint32_t c : *lists[i]) {
            // Lists are sorted by size, and any cover needs |C| - 1 helpers.
            if (std::popcount(c) - 1 >= best)
                break;
            const std::uint32_t next = helpers | (c & ~erased);
            if (std::popcount(next) >= best)
                continue;
            run(i + 1, next);
        }
    }
};

} // namespace

std::optional<int> CircuitIndex::jointCost(std::uint32_t erasedMask) const
{
    if (erasedMask == 0)
        return 0;
    std::vector<std::vector<std::uint32_t>> usable;
    for (int b = 0; b < n_; ++b) {
        if (!(erasedMask & (1u << b)))
            continue;
        const std::uint32_t others = erasedMask & ~(1u << b);
        std::vector<std::uint32_t> list;
        for (std::uint32_t c : byBlock_[static_cast<std::size_t>(b)])
            if ((c & others) == 0)
                list.push_back(c);
        if (list.empty())
            return std::nullopt;
        usable.push_back(std::move(list));
    }
    std::sort(usable.begin(), usable.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    CoverSearch search;
    search.erased = erasedMask;
    for (const auto& l : usable)
        search.lists.push_back(&l);
    search.run(0, 0);
    return search.best;
}

RepairStats averageRepairBandwidth(const CircuitIndex& index, const Matrix& generator, int failures)
{
    RepairStats stats;
    double total = 0.0;
    const int n = static_cast<int>(generator.cols());
    forEachCombination(n, failures, [&](std::span<const int> e) {
        if (!isDecodable(generator, e)) {
            ++stats.undecodable;
            return true;
        }
        std::uint32_t mask = 0;
        for (int b : e)
            mask |= 1u << b;
        const auto cost = index.jointCost(mask);
        if (!cost) {
            ++stats.undecodable;
            return true;
        }
        total += *cost;
        ++stats.patterns;
        return true;
    });
    stats.average = stats.patterns ? total / static_cast<double>(stats.patterns) : 0.0;
    return stats;
}

RepairStats averageRepairBandwidth(const Matrix& generator, int failures)
{
    return averageRepairBandwidth(CircuitIndex(generator), generator, failures);
}

double avgRepairBandwidthSingle(const BlrcCode& code)
{
    return averageRepairBandwidth(code.generator(), 1).average;
}

RepairStats avgRepairBandwidthDouble(const BlrcCode& code)
{
    return averageRepairBandwidth(code.generator(), 2);
}

std::map<int, double> decodabilityProfile(const Matrix& generator, int fMax)
{
    const int n = static_cast<int>(generator.cols());
    if (fMax > n)
        throw std::invalid_argument("fMax exceeds code length");
    std::map<int, double> profile;
    for (int f = 1; f <= fMax; ++f) {
        std::uint64_t ok = 0;
        forEachCombination(n, f, [&](std::span<const int> e) {
            ok += isDecodable(generator, e);
            return true;
        });
        profile[f] = static_cast<double>(ok) / static_cast<double>(binomial(n, f));
    }
    return profile;
}

std::map<int, double> decodabilityProfile(const BlrcCode& code, int fMax)
{
    return decodabilityProfile(code.generator(), fMax);
}

MetricsReport buildReport(const Matrix& parity, int fMax, std::string label)
{
    const Matrix g = systematicGenerator(parity);
    const SupportPattern support = SupportPattern::of(parity);
    const int k = static_cast<int>(parity.rows());
    const int r = static_cast<int>(parity.cols());

    MetricsReport rep;
    rep.label = std::move(label);
    rep.n = k + r;
    rep.k = k;
    rep.storageOverhead = static_cast<double>(r) / k;

    const CircuitIndex index(g);
    rep.avgRepairSingle = averageRepairBandwidth(index, g, 1).average;
    const RepairStats dbl = averageRepairBandwidth(index, g, 2);
    rep.avgRepairDouble = dbl.average;
    rep.undecodablePairs = dbl.undecodable;

    int nonzeros = 0;
    int widest = 0;
    for (int c = 0; c < r; ++c) {
        nonzeros += support.columnWeight(c);
        widest = std::max(widest, support.columnWeight(c));
    }
    rep.avgColumnWeight = static_cast<double>(nonzeros) / r;
    rep.updateComplexity = updateComplexity(parity);
    rep.minDistance = minimumDistance(g);
    if (widest > 0)
        rep.distanceBound = distanceBound(rep.n, k, widest);
    rep.decodability = decodabilityProfile(g, std::min(fMax, rep.n));
    return rep;
}

MetricsReport buildReport(const BlrcCode& code, std::string label)
{
    const int fMax = std::max(code.spec().w + 3, code.spec().r());
    return buildReport(code.parity(), fMax, std::move(label));
}

} // namespace blrc
