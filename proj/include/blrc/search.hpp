#pragma once

#include "blrc/code.hpp"
#include "blrc/random.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace blrc {

struct SearchConfig {
    int n = 0;
    int k = 0;
    int d = 0;
    std::uint64_t seed = 1;
    int maxIterations = 2000; // proposals per restart
    int patience = 200;       // consecutive rejected proposals before a restart stops
    int restarts = 8;
    int threads = 0;          // 0 = hardware concurrency
    Field field;

    // Spec with w = d - 1. Throws ConstructionFailure naming the violated
    // constraint.
    CodeSpec spec() const;
};

struct TraceStep {
    int restart = 0;
    int iteration = 0;     // 0 is the initial random code
    double objective = 0;  // double-failure average of the proposal; inf if no coefficients were found
    double single = 0;
    bool accepted = false;
    double bestSoFar = 0;  // within this restart
};

struct SearchTrace {
    std::vector<TraceStep> steps;

    // Header "restart,iteration,objective,single,accepted,best".
    void writeCsv(std::ostream& out) const;
};

struct SearchResult {
    BlrcCode code;
    double avgRepairDouble = 0;
    double avgRepairSingle = 0;
    int restart = 0; // restart that produced `code`
    SearchTrace trace;
};

// Random balanced support: heavy columns are drawn at random, then each row
// takes w random columns, always including columns whose remaining quota
// equals the number of rows left. That rule keeps every partial assignment
// completable, so no backtracking is needed.
SupportPattern randomSupport(const CodeSpec& spec, std::uint64_t seed);

// Random quota-preserving move: row a moves a mark from column x to y and a
// row b that has y but not x moves its mark from y to x. Returns false (and
// leaves the pattern alone) when no such pair exists after a few tries.
bool proposeSwap(SupportPattern& support, Rng& rng);

/// Stochastic hill climbing over supports. Each proposal gets fresh seeded
/// coefficients, is discarded unless every d-1 erasures are decodable, and is
/// accepted iff (double average, single average) is lexicographically smaller
/// than the current state. Restarts run in parallel; the best restart wins,
/// ties going to the lower restart index, so the result depends only on the
/// config.
SearchResult hillClimb(const SearchConfig& config);

} // namespace blrc
