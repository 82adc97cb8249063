#include "blrc/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blrc {

const char* toString(UnitConvention u)
{
    return u == UnitConvention::Decimal ? "decimal" : "binary";
}

UnitConvention parseUnitConvention(const std::string& s)
{
    if (s == "decimal")
        return UnitConvention::Decimal;
    if (s == "binary")
        return UnitConvention::Binary;
    throw std::invalid_argument("units must be 'decimal' or 'binary', got '" + s + "'");
}

ReliabilityParams ReliabilityParams::defaults(UnitConvention units)
{
    return fromHumanUnits(30, 3000, 256, 1, 4, units);
}

ReliabilityParams ReliabilityParams::fromHumanUnits(double petabytes, double nodes, double megabytes, double gbps,
                                                    double years, UnitConvention units)
{
    const bool dec = units == UnitConvention::Decimal;
    ReliabilityParams p;
    p.totalBytes = petabytes * (dec ? 1e15 : std::ldexp(1.0, 50));
    p.nodes = nodes;
    p.blockBytes = megabytes * (dec ? 1e6 : std::ldexp(1.0, 20));
    p.repairBitsPerSec = gbps * (dec ? 1e9 : std::ldexp(1.0, 30));
    p.mttfDays = years * 365.0;
    p.units = units;
    p.check();
    return p;
}

void ReliabilityParams::check() const
{
    if (!(totalBytes > 0 && nodes > 0 && blockBytes > 0 && repairBitsPerSec > 0))
        throw std::invalid_argument("reliability parameters must be strictly positive");
    if (!(mttfDays > 0))
        throw std::invalid_argument("MTTF must be strictly positive");
}

double ReliabilityParams::repairRatePerDay(double blocks) const
{
    const double seconds = blocks * blockBytes * 8.0 / repairBitsPerSec;
    return 86400.0 / seconds;
}

std::optional<std::size_t> MarkovModel::find(const std::string& label) const
{
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].label == label)
            return i;
    return std::nullopt;
}

ChainInputs ChainInputs::fromReport(const MetricsReport& report)
{
    ChainInputs in;
    in.n = report.n;
    in.k = report.k;
    in.decodability = report.decodability;
    in.repairBlocks[1] = report.avgRepairSingle;
    in.repairBlocks[2] = report.avgRepairDouble;
    return in;
}

double ChainInputs::repairBlocksFor(int failed) const
{
    if (auto it = repairBlocks.find(failed); it != repairBlocks.end())
        return it->second;
    return k;
}

double ChainInputs::decodableFor(int failed) const
{
    if (failed <= 0)
        return 1.0;
    if (failed > n - k)
        return 0.0;
    auto it = decodability.find(failed);
    if (it == decodability.end())
        throw std::invalid_argument("decodability profile lacks p_" + std::to_string(failed));
    return it->second;
}

MarkovModel buildModel(const ChainInputs& in, const ReliabilityParams& params)
{
    if (in.n <= in.k || in.k <= 0)
        throw std::invalid_argument("chain needs n > k > 0");
    double prev = 1.0;
    for (const auto& [f, p] : in.decodability) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument("p_" + std::to_string(f) + " outside [0, 1]");
        if (p > prev + 1e-12)
            throw std::invalid_argument("decodability increases at f=" + std::to_string(f));
        prev = p;
    }

    const double lambda = params.failureRatePerDay();
    MarkovModel m;
    // Up states first: f = 0, 1, ... failed blocks while p_f > 0.
    std::vector<int> up;
    for (int f = 0; f <= in.n && in.decodableFor(f) > 0.0; ++f)
        up.push_back(f);
    for (int f : up)
        m.states.push_back({std::to_string(in.n - f), false});

    const std::size_t down = m.states.size();
    m.states.push_back({std::to_string(in.n - static_cast<int>(up.size())), true});

    auto grow = [&m]() {
        for (auto& row : m.generator)
            row.push_back(0.0);
        m.generator.emplace_back(m.states.size(), 0.0);
    };
    m.generator.assign(m.states.size(), std::vector<double>(m.states.size(), 0.0));

    for (std::size_t i = 0; i < up.size(); ++i) {
        const int f = up[i];
        const double fail = (in.n - f) * lambda;
        const double p = in.decodableFor(f + 1);
        if (fail > 0) {
            if (i + 1 < up.size()) {
                m.generator[i][i + 1] += fail * p;
                if (p < 1.0) {
                    m.states.push_back({std::to_string(in.n - f - 1) + "F", true});
                    grow();
                    m.generator[i][m.states.size() - 1] += fail * (1.0 - p);
                }
            } else {
                m.generator[i][down] += fail;
            }
        }
        if (f > 0)
            m.generator[i][i - 1] += params.repairRatePerDay(in.repairBlocksFor(f));
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        double out = 0.0;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != i)
                out += m.generator[i][j];
        m.generator[i][i] = -out;
    }
    m.initial = 0;
    return m;
}

MarkovModel buildModel(const MetricsReport& report, const ReliabilityParams& params)
{
    return buildModel(ChainInputs::fromReport(report), params);
}

double mttdlStripe(const MarkovModel& model)
{
    // Transient states keep their rates among themselves plus one lumped
    // absorption rate; eliminating state s folds its paths into the others:
    //   q(i,j) += q(i,s) q(s,j) / D_s,  a(i) += q(i,s) a(s) / D_s,
    //   c(i)   += q(i,s) c(s) / D_s,    D_s = a(s) + sum_j q(s,j)
    // where c is the expected time accumulated before leaving. Self loops
    // are dropped, so no subtraction ever occurs.
    std::vector<std::size_t> transient;
    for (std::size_t i = 0; i < model.size(); ++i)
        if (!model.states[i].absorbing)
            transient.push_back(i);
    if (model.states[model.initial].absorbing)
        return 0.0;

    const std::size_t t = transient.size();
    std::vector<std::vector<double>> q(t, std::vector<double>(t, 0.0));
    std::vector<double> absorb(t, 0.0);
    std::vector<double> cost(t, 1.0);
    std::size_t start = 0;
    for (std::size_t a = 0; a < t; ++a) {
        const std::size_t i = transient[a];
        if (i == model.initial)
            start = a;
        for (std::size_t j = 0; j < model.size(); ++j) {
            if (j == i)
                continue;
            const double r = model.generator[i][j];
            if (r < 0)
                throw std::invalid_argument("negative off-diagonal rate");
            if (model.states[j].absorbing)
                absorb[a] += r;
            else
                q[a][static_cast<std::size_t>(std::find(transient.begin(), transient.end(), j) - transient.begin())] += r;
        }
    }

    std::vector<bool> alive(t, true);
    for (std::size_t s = 0; s < t; ++s) {
        if (s == start)
            continue;
        double exit = absorb[s];
        for (std::size_t j = 0; j < t; ++j)
            if (alive[j] && j != s)
                exit += q[s][j];
        alive[s] = false;
        if (exit == 0.0) {
            // A trap: any state that can enter it never absorbs.
            for (std::size_t i = 0; i < t; ++i)
                if (alive[i] && q[i][s] > 0.0)
                    cost[i] = std::numeric_limits<double>::infinity();
            continue;
        }
        for (std::size_t i = 0; i < t; ++i) {
            if (!alive[i] || q[i][s] == 0.0)
                continue;
            const double w = q[i][s] / exit;
            absorb[i] += w * absorb[s];
            cost[i] += w * cost[s];
            for (std::size_t j = 0; j < t; ++j)
                if (alive[j] && j != i)
                    q[i][j] += w * q[s][j];
            q[i][s] = 0.0;
        }
    }
    // Only the initial state remains: time = cost / (absorption rate).
    if (absorb[start] == 0.0 || std::isinf(cost[start]))
        return std::numeric_limits<double>::infinity();
    return cost[start] / absorb[start];
}

double mttdlSystem(double stripeDays, int n, const ReliabilityParams& params)
{
    return stripeDays / params.stripeCount(n);
}

} // namespace blrc
