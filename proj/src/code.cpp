#include "blrc/code.hpp"

#include "blrc/basis.hpp"
#include "blrc/combinatorics.hpp"
#include "blrc/errors.hpp"
#include "blrc/random.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blrc {

void CodeSpec::check() const
{
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (k <= 0)
        fail("k must be positive");
    if (n <= k)
        fail("n must exceed k (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    if (w < 1)
        fail("row weight w must be at least 1");
    if (w > r())
        fail("w=" + std::to_string(w) + " > r=" + std::to_string(r()) + ": a parity row has only r slots");
    if (w >= k)
        fail("w=" + std::to_string(w) + " must be < k=" + std::to_string(k));
    if (w * k < r())
        fail("w*k=" + std::to_string(w * k) + " < r=" + std::to_string(r()) + ": some parity column would be empty");
}

int distanceBound(int n, int k, int locality)
{
    if (locality <= 0)
        throw std::invalid_argument("locality must be positive");
    return n - k + 2 - (k + locality - 1) / locality;
}

SupportPattern::SupportPattern(int rows, int cols)
    : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols), 0)
{
}

SupportPattern SupportPattern::fromRows(int cols, const std::vector<std::vector<int>>& rows)
{
    SupportPattern s(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : rows[r]) {
            if (c < 0 || c >= cols)
                throw std::invalid_argument("support column out of range");
            s.set(static_cast<int>(r), c, true);
        }
    return s;
}

SupportPattern SupportPattern::of(const Matrix& parity)
{
    SupportPattern s(static_cast<int>(parity.rows()), static_cast<int>(parity.cols()));
    for (std::size_t r = 0; r < parity.rows(); ++r)
        for (std::size_t c = 0; c < parity.cols(); ++c)
            s.set(static_cast<int>(r), static_cast<int>(c), parity(r, c) != 0);
    return s;
}

int SupportPattern::rowWeight(int r) const
{
    int w = 0;
    for (int c = 0; c < cols_; ++c)
        w += at(r, c);
    return w;
}

int SupportPattern::columnWeight(int c) const
{
    int w = 0;
    for (int r = 0; r < rows_; ++r)
        w += at(r, c);
    return w;
}

std::vector<int> SupportPattern::rowColumns(int r) const
{
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c)
        if (at(r, c))
            out.push_back(c);
    return out;
}

std::vector<std::string> SupportPattern::violations(const CodeSpec& spec) const
{
    std::vector<std::string> out;
    if (rows_ != spec.k || cols_ != spec.r()) {
        out.push_back("support is " + std::to_string(rows_) + "x" + std::to_string(cols_) + ", expected " +
                      std::to_string(spec.k) + "x" + std::to_string(spec.r()));
        return out;
    }
    for (int r = 0; r < rows_; ++r)
        if (const int w = rowWeight(r); w != spec.w)
            out.push_back("row " + std::to_string(r + 1) + " has weight " + std::to_string(w) + ", expected " +
                          std::to_string(spec.w));
    const int l = spec.l();
    int heavy = 0;
    for (int c = 0; c < cols_; ++c) {
        const int w = columnWeight(c);
        if (w != l && w != l + 1)
            out.push_back("column " + std::to_string(spec.k + c + 1) + " has weight " + std::to_string(w) +
                          ", expected " + std::to_string(l) + " or " + std::to_string(l + 1));
        heavy += (w == l + 1);
    }
    if (heavy != spec.heavyColumns())
        out.push_back(std::to_string(heavy) + " columns of weight l+1, expected " +
                      std::to_string(spec.heavyColumns()));
    return out;
}

bool ValidationReport::ok() const noexcept
{
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (const auto& c : clauses) {
        os << (c.passed ? "pass" : "FAIL") << "  " << c.clause;
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << '\n';
    }
    return os.str();
}

namespace {

// First row subset of size <= w whose rows are linearly dependent.
std::optional<std::vector<int>> findRankViolation(const Matrix& parity, int w)
{
    const int k = static_cast<int>(parity.rows());
    const Field& field = parity.field();
    VectorBasis basis(field, parity.cols());
    std::optional<std::vector<int>> bad;
    for (int v = 1; v <= w && !bad; ++v) {
        forEachCombination(k, v, [&](std::span<const int> rows) {
            basis.clear();
            for (int r : rows) {
                if (!basis.insert(parity.row(static_cast<std::size_t>(r)))) {
                    bad = std::vector<int>(rows.begin(), rows.end());
                    return false;
                }
            }
            return true;
        });
    }
    return bad;
}

std::string joinRows(const std::vector<int>& rows)
{
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i)
        s += (i ? "," : "") + std::to_string(rows[i] + 1);
    return s + "}";
}

} // namespace

ValidationReport validate(const Matrix& parity, const CodeSpec& spec)
{
    spec.check();
    if (parity.rows() != static_cast<std::size_t>(spec.k) || parity.cols() != static_cast<std::size_t>(spec.r()))
        throw std::invalid_argument("parity matrix must be k x (n-k)");
    if (!(parity.field() == spec.field))
        throw FieldMismatch();

    ValidationReport report;
    const SupportPattern support = SupportPattern::of(parity);
    const int l = spec.l();

    ClauseResult rows{"row weight = " + std::to_string(spec.w), true, {}};
    for (int r = 0; r < spec.k; ++r)
        if (const int w = support.rowWeight(r); w != spec.w) {
            rows.passed = false;
            rows.detail += "row " + std::to_string(r + 1) + " has weight " + std::to_string(w) + "; ";
        }
    report.clauses.push_back(rows);

    ClauseResult cols{"column weight in {" + std::to_string(l) + "," + std::to_string(l + 1) + "}", true, {}};
    int heavy = 0;
    for (int c = 0; c < spec.r(); ++c) {
        const int w = support.columnWeight(c);
        heavy += (w == l + 1);
        if (w != l && w != l + 1) {
            cols.passed = false;
            cols.detail += "column " + std::to_string(spec.k + c + 1) + " has weight " + std::to_string(w) + "; ";
        }
    }
    report.clauses.push_back(cols);

    ClauseResult census{"columns of weight l+1 = " + std::to_string(spec.heavyColumns()), true, {}};
    if (heavy != spec.heavyColumns()) {
        census.passed = false;
        census.detail = "found " + std::to_string(heavy);
    }
    report.clauses.push_back(census);

    ClauseResult rankClause{"every v-row submatrix, 1 <= v <= " + std::to_string(spec.w) + ", has rank v", true, {}};
    if (auto bad = findRankViolation(parity, spec.w)) {
        rankClause.passed = false;
        rankClause.detail = "rows " + joinRows(*bad) + " are dependent (v=" + std::to_string(bad->size()) + ")";
        report.rankViolation = std::move(bad);
    }
    report.clauses.push_back(rankClause);
    return report;
}

Matrix systematicGenerator(const Matrix& parity)
{
    const std::size_t k = parity.rows();
    const std::size_t r = parity.cols();
    Matrix g(parity.field(), k, k + r);
    for (std::size_t i = 0; i < k; ++i) {
        g(i, i) = 1;
        for (std::size_t j = 0; j < r; ++j)
            g(i, k + j) = parity(i, j);
    }
    return g;
}

BlrcCode::BlrcCode(CodeSpec spec, Matrix parity)
    : spec_(std::move(spec)), parity_(std::move(parity))
{
    const ValidationReport report = validate(parity_, spec_);
    if (!report.ok())
        throw ConstructionFailure("parity matrix is not a balanced locally repairable code:\n" + report.summary());
    generator_ = systematicGenerator(parity_);
}

Codeword BlrcCode::encode(std::span<const Symbol> data) const
{
    if (data.size() != static_cast<std::size_t>(spec_.k))
        throw std::invalid_argument("encode expects k data symbols");
    Codeword out(static_cast<std::size_t>(spec_.n), 0);
    std::copy(data.begin(), data.end(), out.begin());
    const Field& f = spec_.field;
    for (int j = 0; j < spec_.r(); ++j) {
        Symbol acc = 0;
        for (int i = 0; i < spec_.k; ++i)
            acc ^= f.mul(data[static_cast<std::size_t>(i)], parity_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        out[static_cast<std::size_t>(spec_.k + j)] = acc;
    }
    return out;
}

BlrcCode assignCoefficients(const SupportPattern& support, const CodeSpec& spec, std::uint64_t seed, int retries)
{
    spec.check();
    if (const auto v = support.violations(spec); !v.empty())
        throw std::invalid_argument("support pattern is not balanced: " + v.front());
    const Field& f = spec.field;
    Rng rng(seed);
    std::optional<std::vector<int>> lastBad;
    for (int attempt = 0; attempt < retries; ++attempt) {
        Matrix p(f, static_cast<std::size_t>(spec.k), static_cast<std::size_t>(spec.r()));
        for (int r = 0; r < spec.k; ++r)
            for (int c = 0; c < spec.r(); ++c)
                if (support.at(r, c))
                    p(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        static_cast<Symbol>(1 + uniformBelow(rng, f.size() - 1));
        lastBad = findRankViolation(p, spec.w);
        if (!lastBad)
            return BlrcCode(spec, std::move(p));
    }
    throw ConstructionFailure("rank condition still violated after " + std::to_string(retries) +
                              " coefficient draws; rows " + joinRows(*lastBad) +
                              " stay dependent (field too small or support defective)");
}

bool isDecodable(const Matrix& generator, std::span<const int> erased)
{
    const std::size_t n = generator.cols();
    const std::size_t k = generator.rows();
    std::vector<bool> gone(n, false);
    for (int e : erased)
        gone[static_cast<std::size_t>(e)] = true;
    VectorBasis basis(generator.field(), k);
    std::vector<Symbol> col(k);
    for (std::size_t c = 0; c < n && basis.rank() < k; ++c) {
        if (gone[c])
            continue;
        for (std::size_t r = 0; r < k; ++r)
            col[r] = generator(r, c);
        basis.insert(col);
    }
    return basis.rank() == k;
}

Codeword decodeErasure(const BlrcCode& code, std::span<const Symbol> received, std::span<const int> erased)
{
    const int n = code.n();
    const int k = code.k();
    if (received.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("received word must have n entries");
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (int e : erased) {
        if (e < 0 || e >= n)
            throw std::invalid_argument("erased index out of range");
        gone[static_cast<std::size_t>(e)] = true;
    }
    if (erased.empty())
        return Codeword(received.begin(), received.end());

    // Pick k independent surviving columns and solve for the data.
    const Matrix& g = code.generator();
    VectorBasis basis(code.field(), static_cast<std::size_t>(k));
    std::vector<int> chosen;
    for (int c = 0; c < n && static_cast<int>(chosen.size()) < k; ++c) {
        if (gone[static_cast<std::size_t>(c)])
            continue;
        if (basis.insert(g.column(static_cast<std::size_t>(c))))
            chosen.push_back(c);
    }
    if (static_cast<int>(chosen.size()) < k) {
        std::vector<int> pattern(erased.begin(), erased.end());
        std::sort(pattern.begin(), pattern.end());
        throw Undecodable(std::move(pattern));
    }
    // data * G_S = y_S  <=>  G_S^T data^T = y_S^T
    const Matrix system = g.selectColumns(chosen).transpose();
    std::vector<Symbol> y(chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i)
        y[i] = received[static_cast<std::size_t>(chosen[i])];
    const std::vector<Symbol> data = solve(system, y);
    return code.encode(data);
}

int minimumDistance(const Matrix& generator)
{
    const int n = static_cast<int>(generator.cols());
    for (int f = 1; f <= n; ++f) {
        const bool allDecodable =
            forEachCombination(n, f, [&](std::span<const int> e) { return isDecodable(generator, e); });
        if (!allDecodable)
            return f;
    }
    return n + 1;
}

int minimumDistance(const BlrcCode& code)
{
    return minimumDistance(code.generator());
}

int updateComplexity(const Matrix& parity)
{
    const SupportPattern s = SupportPattern::of(parity);
    int worst = 0;
    for (int r = 0; r < s.rows(); ++r)
        worst = std::max(worst, s.rowWeight(r));
    return worst + 1;
}

int updateComplexity(const BlrcCode& code)
{
    return updateComplexity(code.parity());
}

} // namespace blrc
