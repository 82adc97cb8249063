#pragma once

#include "blrc/analysis.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blrc {

enum class UnitConvention { Decimal, Binary };

const char* toString(UnitConvention u);
UnitConvention parseUnitConvention(const std::string& s);

/// Cluster parameters, stored in base units.
struct ReliabilityParams {
    double totalBytes = 0;       // C
    double nodes = 0;            // N; kept for reporting, not used by the stripe chain
    double blockBytes = 0;       // B
    double repairBitsPerSec = 0; // gamma
    double mttfDays = 0;         // 1 / lambda
    UnitConvention units = UnitConvention::Decimal;

    // C = 30 PB, N = 3000, B = 256 MB, gamma = 1 Gb/s, MTTF = 4 years of 365 days.
    static ReliabilityParams defaults(UnitConvention units = UnitConvention::Decimal);

    // Scales given in PB, MB, Gb/s and years under the chosen convention.
    static ReliabilityParams fromHumanUnits(double petabytes, double nodes, double megabytes, double gbps,
                                            double years, UnitConvention units);

    double failureRatePerDay() const { return mttfDays > 0 ? 1.0 / mttfDays : 0.0; }
    // Rate (per day) of a repair that transfers `blocks` blocks.
    double repairRatePerDay(double blocks) const;
    double stripeCount(int n) const { return totalBytes / (n * blockBytes); }

    void check() const;
};

/// Absorbing continuous-time Markov chain over per-stripe block availability.
struct MarkovModel {
    struct State {
        std::string label;
        bool absorbing = false;
    };

    std::vector<State> states;
    std::vector<std::vector<double>> generator; // per-day rates, rows sum to 0
    std::size_t initial = 0;

    std::size_t size() const { return states.size(); }
    double rate(std::size_t from, std::size_t to) const { return generator[from][to]; }
    std::optional<std::size_t> find(const std::string& label) const;
};

// Chain inputs taken from a metrics report: decodability p_f and the repair
// transfer sizes b_1 = avgRepairSingle, b_2 = avgRepairDouble, b_f = k beyond.
struct ChainInputs {
    int n = 0;
    int k = 0;
    std::map<int, double> decodability;
    std::map<int, double> repairBlocks;

    static ChainInputs fromReport(const MetricsReport& report);
    double repairBlocksFor(int failed) const;
    // p_f, with p_f = 0 for f > n - k; throws if f is missing otherwise.
    double decodableFor(int failed) const;
};

/// States n, n-1, ... available blocks. From state i the chain fails at
/// rate i*lambda, splitting by p_f into the next up state and an "(i-1)F"
/// data-loss state; states reached with p_f = 0 collapse into one down
/// state. Each up state below n repairs one block at gamma / (b_f * B).
/// Throws std::invalid_argument if p_f increases with f.
MarkovModel buildModel(const ChainInputs& inputs, const ReliabilityParams& params);
MarkovModel buildModel(const MetricsReport& report, const ReliabilityParams& params);

// Expected time (days) to reach any absorbing state from the initial state.
// Uses state reduction that only adds nonnegative quantities, so repair rates
// many orders of magnitude above failure rates do not cancel. Returns
// +infinity when no absorbing state is reachable.
double mttdlStripe(const MarkovModel& model);

// Stripe MTTDL divided by the number of stripes C / (n B).
double mttdlSystem(double stripeDays, int n, const ReliabilityParams& params);

} // namespace blrc
