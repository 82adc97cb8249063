#include "blrc/search.hpp"

#include "blrc/analysis.hpp"
#include "blrc/combinatorics.hpp"
#include "blrc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace blrc {

CodeSpec SearchConfig::spec() const
{
    if (d < 2)
        throw ConstructionFailure("d=" + std::to_string(d) + " must be at least 2");
    CodeSpec s{n, k, d - 1, field};
    try {
        s.check();
    } catch (const std::invalid_argument& e) {
        throw ConstructionFailure(e.what());
    }
    if (maxIterations < 0 || patience < 1 || restarts < 1)
        throw std::invalid_argument("search budget needs maxIterations >= 0, patience >= 1, restarts >= 1");
    return s;
}

void SearchTrace::writeCsv(std::ostream& out) const
{
    out << "restart,iteration,objective,single,accepted,best\n";
    for (const auto& s : steps)
        out << s.restart << ',' << s.iteration << ',' << s.objective << ',' << s.single << ','
            << (s.accepted ? 1 : 0) << ',' << s.bestSoFar << '\n';
}

SupportPattern randomSupport(const CodeSpec& spec, std::uint64_t seed)
{
    spec.check();
    const int k = spec.k;
    const int r = spec.r();
    Rng rng(seed);

    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    auto shuffle = [&rng](std::vector<int>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniformBelow(rng, i)]);
    };
    shuffle(order);
    std::vector<int> quota(static_cast<std::size_t>(r), spec.l());
    for (int i = 0; i < spec.heavyColumns(); ++i)
        ++quota[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

    SupportPattern p(k, r);
    for (int row = 0; row < k; ++row) {
        const int rowsLeft = k - row;
        std::vector<int> forced;
        std::vector<int> open;
        for (int c = 0; c < r; ++c) {
            if (quota[static_cast<std::size_t>(c)] == rowsLeft)
                forced.push_back(c);
            else if (quota[static_cast<std::size_t>(c)] > 0)
                open.push_back(c);
        }
        shuffle(open);
        std::vector<int> pick = forced;
        for (std::size_t i = 0; pick.size() < static_cast<std::size_t>(spec.w); ++i)
            pick.push_back(open[i]);
        for (int c : pick) {
            p.set(row, c, true);
            --quota[static_cast<std::size_t>(c)];
        }
    }
    return p;
}

bool proposeSwap(SupportPattern& support, Rng& rng)
{
    const int k = support.rows();
    const int r = support.cols();
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int a = static_cast<int>(uniformBelow(rng, static_cast<std::uint64_t>(k)));
        const auto cols = support.rowColumns(a);
        if (cols.empty() || static_cast<int>(cols.size()) == r)
            continue;
        const int x = cols[uniformBelow(rng, cols.size())];
        std::vector<int> free;
        for (int c = 0; c < r; ++c)
            if (!support.at(a, c))
                free.push_back(c);
        const int y = free[uniformBelow(rng, free.size())];
        std::vector<int> partners;
        for (int b = 0; b < k; ++b)
            if (b != a && support.at(b, y) && !support.at(b, x))
                partners.push_back(b);
        if (partners.empty())
            continue;
        const int b = partners[uniformBelow(rng, partners.size())];
        support.set(a, x, false);
        support.set(a, y, true);
        support.set(b, y, false);
        support.set(b, x, true);
        return true;
    }
    return false;
}

namespace {

struct Candidate {
    std::optional<BlrcCode> code;
    double dbl = std::numeric_limits<double>::infinity();
    double single = std::numeric_limits<double>::infinity();

    bool betterThan(const Candidate& o) const
    {
        return dbl < o.dbl || (dbl == o.dbl && single < o.single);
    }
};

// Every w-block erasure must be decodable, i.e. the distance really is w + 1.
// The rank condition alone does not ensure this: an unlucky minor of P can
// still vanish.
bool reachesDistance(const Matrix& g, int w)
{
    return forEachCombination(static_cast<int>(g.cols()), w,
                              [&g](std::span<const int> erased) { return isDecodable(g, erased); });
}

Candidate evaluate(const SupportPattern& support, const CodeSpec& spec, std::uint64_t seed)
{
    Candidate c;
    try {
        c.code.emplace(assignCoefficients(support, spec, seed));
    } catch (const ConstructionFailure&) {
        return c;
    }
    const Matrix& g = c.code->generator();
    if (!reachesDistance(g, spec.w)) {
        c.code.reset();
        return c;
    }
    const CircuitIndex index(g);
    c.single = averageRepairBandwidth(index, g, 1).average;
    c.dbl = averageRepairBandwidth(index, g, 2).average;
    return c;
}

struct RestartOutcome {
    Candidate best;
    std::vector<TraceStep> steps;
};

RestartOutcome climb(const SearchConfig& cfg, const CodeSpec& spec, int restart)
{
    RestartOutcome out;
    Rng rng(mixSeed(cfg.seed, static_cast<std::uint64_t>(restart)));

    // A support whose rows cannot reach full rank is redrawn.
    SupportPattern current;
    Candidate cur;
    for (int attempt = 0; attempt < 50 && !cur.code; ++attempt) {
        current = randomSupport(spec, rng());
        cur = evaluate(current, spec, rng());
    }
    if (!cur.code)
        return out;
    out.steps.push_back({restart, 0, cur.dbl, cur.single, true, cur.dbl});

    int stale = 0;
    for (int it = 1; it <= cfg.maxIterations && stale < cfg.patience; ++it) {
        SupportPattern next = current;
        if (!proposeSwap(next, rng))
            break;
        Candidate cand = evaluate(next, spec, rng());
        const bool accept = cand.code && cand.betterThan(cur);
        if (accept) {
            current = std::move(next);
            cur = std::move(cand);
            stale = 0;
        } else {
            ++stale;
        }
        out.steps.push_back({restart, it, accept ? cur.dbl : cand.dbl, accept ? cur.single : cand.single, accept,
                             cur.dbl});
    }
    out.best = std::move(cur);
    return out;
}

} // namespace

SearchResult hillClimb(const SearchConfig& config)
{
    const CodeSpec spec = config.spec();
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));

    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, static_cast<unsigned>(config.restarts));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < config.restarts; i = next++)
            outcomes[static_cast<std::size_t>(i)] = climb(config, spec, i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    int bestIndex = -1;
    for (int i = 0; i < config.restarts; ++i) {
        const auto& o = outcomes[static_cast<std::size_t>(i)];
        if (o.best.code && (bestIndex < 0 || o.best.betterThan(outcomes[static_cast<std::size_t>(bestIndex)].best)))
            bestIndex = i;
    }
    if (bestIndex < 0)
        throw ConstructionFailure("no restart found a support whose coefficients satisfy the rank condition");

    auto& win = outcomes[static_cast<std::size_t>(bestIndex)].best;
    SearchResult result{std::move(*win.code), win.dbl, win.single, bestIndex, {}};
    for (auto& o : outcomes)
        result.trace.steps.insert(result.trace.steps.end(), o.steps.begin(), o.steps.end());
    return result;
}

} // namespace blrc
