#pragma once

#include "blrc/code.hpp"
#include "blrc/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blrc {

/// Sorted set of distinct erased block indices (0-based) of an n-block stripe.
class ErasurePattern {
public:
    ErasurePattern() = default;
    // Throws std::invalid_argument for out-of-range or duplicate indices.
    ErasurePattern(int n, std::vector<int> indices);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return idx_.size(); }
    bool empty() const noexcept { return idx_.empty(); }
    bool contains(int block) const;
    const std::vector<int>& indices() const noexcept { return idx_; }
    std::vector<int> survivors() const;

    friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;

private:
    int n_ = 0;
    std::vector<int> idx_;
};

struct RepairPlan {
    ErasurePattern erased;
    std::vector<int> helpers; // sorted, disjoint from erased
    int cost = 0;             // helpers.size(), in blocks transferred
    bool certifiedMinimal = true;
};

// Largest n for which minimalRepair searches exhaustively.
inline constexpr int kExhaustiveRepairLimit = 24;

/// Smallest set of surviving blocks whose generator columns span every
/// erased column. Subsets are tried in increasing size and lexicographic
/// order, so the first hit is the lexicographically smallest minimum. Above
/// kExhaustiveRepairLimit a greedy pruning is used and the plan is flagged.
/// Throws Undecodable when the survivors do not determine the data.
RepairPlan minimalRepair(const Matrix& generator, const ErasurePattern& erased);
RepairPlan minimalRepair(const BlrcCode& code, const ErasurePattern& erased);

// For each erased block, coefficients a_h over plan.helpers with
// column(erased) = sum_h a_h column(h). Row i belongs to erased()[i].
std::vector<std::vector<Symbol>> repairCoefficients(const Matrix& generator, const RepairPlan& plan);

/// Circuits (minimal dependent column sets) of the generator, stored as
/// bitmasks over the n blocks. A set of surviving helpers repairs block e
/// exactly when it contains C \ {e} for some circuit C through e that avoids
/// the other erased blocks, which turns repair costs into small set-cover
/// problems over the circuit list. Limited to n <= 32.
class CircuitIndex {
public:
    explicit CircuitIndex(const Matrix& generator);

    int n() const noexcept { return n_; }
    const std::vector<std::uint32_t>& circuits() const noexcept { return circuits_; }

    // Minimal joint repair cost for the erased set, or nullopt if some erased
    // block cannot be rebuilt from the survivors.
    std::optional<int> jointCost(std::uint32_t erasedMask) const;
    std::optional<int> singleCost(int block) const { return jointCost(1u << block); }

private:
    int n_;
    std::vector<std::uint32_t> circuits_;
    std::vector<std::vector<std::uint32_t>> byBlock_; // sorted by size
};

struct RepairStats {
    double average = 0.0;       // blocks, over repairable patterns
    std::uint64_t patterns = 0; // repairable patterns averaged
    std::uint64_t undecodable = 0;
};

// Mean minimal joint repair cost over all f-block erasure patterns whose
// survivors still determine the data.
RepairStats averageRepairBandwidth(const Matrix& generator, int failures);
RepairStats averageRepairBandwidth(const CircuitIndex& index, const Matrix& generator, int failures);

double avgRepairBandwidthSingle(const BlrcCode& code);
RepairStats avgRepairBandwidthDouble(const BlrcCode& code);

// p_f = fraction of f-subsets whose survivors have rank k, for f = 1..fMax.
std::map<int, double> decodabilityProfile(const Matrix& generator, int fMax);
std::map<int, double> decodabilityProfile(const BlrcCode& code, int fMax);

struct MetricsReport {
    std::string label;
    int n = 0;
    int k = 0;
    double storageOverhead = 0.0;  // ratio r/k
    double avgRepairSingle = 0.0;  // blocks
    double avgRepairDouble = 0.0;  // blocks
    std::uint64_t undecodablePairs = 0;
    double avgColumnWeight = 0.0;  // nonzeros per parity column
    int updateComplexity = 0;      // writes
    int minDistance = 0;
    std::optional<int> distanceBound; // n-k+2-ceil(k/l) with l the largest column weight
    std::map<int, double> decodability;
};

// Full metrics for any systematic generator [I_k | P]; decodability is
// enumerated for f = 1..fMax.
MetricsReport buildReport(const Matrix& parity, int fMax, std::string label = {});

// fMax = max(w + 3, n - k), so every f with 0 < p_f < 1 is covered.
MetricsReport buildReport(const BlrcCode& code, std::string label = {});

} // namespace blrc
