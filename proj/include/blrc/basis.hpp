#pragma once

#include "blrc/gf.hpp"

#include <span>
#include <vector>

namespace blrc {

/// Incrementally built echelon basis of a subspace of GF(2^m)^dim.
/// Each stored vector is normalised to 1 at its pivot.
class VectorBasis {
public:
    VectorBasis(const Field& field, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

    // Adds v; returns false (and leaves the basis unchanged) if v is dependent.
    bool insert(std::span<const Symbol> v);
    bool contains(std::span<const Symbol> v) const;
    void clear() noexcept;

private:
    // Reduces scratch_ against the basis; returns first nonzero index or dim.
    std::size_t reduce() const;

    const Field* field_;
    std::size_t dim_;
    std::vector<Symbol> rows_;
    std::vector<std::size_t> pivots_;
    mutable std::vector<Symbol> scratch_;
};

} // namespace blrc
