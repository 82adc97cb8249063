#pragma once

#include "blrc/gf.hpp"
#include "blrc/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace blrc {

/// Parameters of a balanced code: length n, dimension k and parity row
/// weight w. Blocks 0..k-1 are systematic, k..n-1 are parity.
struct CodeSpec {
    int n = 0;
    int k = 0;
    int w = 0;
    Field field;

    int r() const noexcept { return n - k; }
    int d() const noexcept { return w + 1; }
    // Lower column weight; columns carry l or l + 1 nonzeros.
    int l() const noexcept { return r() > 0 ? (w * k) / r() : 0; }
    // Number of columns that must carry l + 1 nonzeros.
    int heavyColumns() const noexcept { return w * k - r() * l(); }

    // Throws std::invalid_argument naming the violated constraint.
    void check() const;
};

// Upper bound n - k + 2 - ceil(k / l) on the minimum distance of a code with
// locality l.
int distanceBound(int n, int k, int locality);

/// Zero/nonzero skeleton of a k x r parity matrix.
class SupportPattern {
public:
    SupportPattern() = default;
    SupportPattern(int rows, int cols);
    // Rows given as lists of 0-based columns.
    static SupportPattern fromRows(int cols, const std::vector<std::vector<int>>& rows);
    static SupportPattern of(const Matrix& parity);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool at(int r, int c) const noexcept { return cells_[static_cast<std::size_t>(r * cols_ + c)] != 0; }
    void set(int r, int c, bool on) { cells_[static_cast<std::size_t>(r * cols_ + c)] = on ? 1 : 0; }

    int rowWeight(int r) const;
    int columnWeight(int c) const;
    std::vector<int> rowColumns(int r) const;

    // Row/column weight violations against `spec`, empty when balanced.
    std::vector<std::string> violations(const CodeSpec& spec) const;

    friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

struct ClauseResult {
    std::string clause;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ClauseResult> clauses;
    // 0-based rows of the first rank-deficient subset, if any.
    std::optional<std::vector<int>> rankViolation;

    bool ok() const noexcept;
    std::string summary() const;
};

// Checks row weights, column weights, the l/l+1 census and the rank of every
// v-row submatrix for 1 <= v <= w.
ValidationReport validate(const Matrix& parity, const CodeSpec& spec);

using Codeword = std::vector<Symbol>;

/// Systematic code with generator [I_k | P] whose parity part satisfies the
/// balanced-weight and rank conditions. Immutable once constructed.
class BlrcCode {
public:
    // Throws ConstructionFailure with the validation summary when invalid.
    BlrcCode(CodeSpec spec, Matrix parity);

    const CodeSpec& spec() const noexcept { return spec_; }
    const Matrix& parity() const noexcept { return parity_; }
    const Field& field() const noexcept { return spec_.field; }
    int n() const noexcept { return spec_.n; }
    int k() const noexcept { return spec_.k; }
    SupportPattern support() const { return SupportPattern::of(parity_); }

    // k x n generator [I_k | P].
    const Matrix& generator() const noexcept { return generator_; }

    Codeword encode(std::span<const Symbol> data) const;

private:
    CodeSpec spec_;
    Matrix parity_;
    Matrix generator_;
};

// Generator [I_k | P] for any k x r parity matrix.
Matrix systematicGenerator(const Matrix& parity);

// Fills the support with seeded random nonzero coefficients, redrawing until
// the rank condition holds. Throws ConstructionFailure after `retries` draws.
BlrcCode assignCoefficients(const SupportPattern& support, const CodeSpec& spec, std::uint64_t seed,
                            int retries = 100);

// True iff the columns of G outside `erased` have rank k.
bool isDecodable(const Matrix& generator, std::span<const int> erased);

// Recovers the full codeword from the entries of `received` outside `erased`.
// Entries at erased positions are ignored. Throws Undecodable.
Codeword decodeErasure(const BlrcCode& code, std::span<const Symbol> received, std::span<const int> erased);

// Smallest number of erasures that can make the data unrecoverable, found by
// exhaustive search over erasure patterns of increasing size.
int minimumDistance(const Matrix& generator);
int minimumDistance(const BlrcCode& code);

// Block writes caused by updating one data block.
int updateComplexity(const Matrix& parity);
int updateComplexity(const BlrcCode& code);

} // namespace blrc
