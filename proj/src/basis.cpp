#include "blrc/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace blrc {

VectorBasis::VectorBasis(const Field& field, std::size_t dim)
    : field_(&field), dim_(dim), scratch_(dim)
{
    rows_.reserve(dim * dim);
    pivots_.reserve(dim);
}

void VectorBasis::clear() noexcept
{
    rows_.clear();
    pivots_.clear();
}

std::size_t VectorBasis::reduce() const
{
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
        const Symbol factor = scratch_[pivots_[b]];
        if (factor == 0)
            continue;
        const Symbol* row = rows_.data() + b * dim_;
        if (const Symbol* tab = field_->productRow(factor)) {
            for (std::size_t i = pivots_[b]; i < dim_; ++i)
                scratch_[i] ^= tab[row[i]];
        } else {
            for (std::size_t i = pivots_[b]; i < dim_; ++i)
                scratch_[i] ^= field_->mul(factor, row[i]);
        }
    }
    std::size_t lead = 0;
    while (lead < dim_ && scratch_[lead] == 0)
        ++lead;
    return lead;
}

bool VectorBasis::insert(std::span<const Symbol> v)
{
    if (v.size() != dim_)
        throw std::invalid_argument("vector dimension mismatch");
    if (pivots_.size() == dim_)
        return false;
    std::copy(v.begin(), v.end(), scratch_.begin());
    const std::size_t lead = reduce();
    if (lead == dim_)
        return false;
    const Symbol scale = field_->inv(scratch_[lead]);
    for (std::size_t i = lead; i < dim_; ++i)
        scratch_[i] = field_->mul(scratch_[i], scale);
    // Keep pivots ascending so a single forward pass reduces a vector.
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos * dim_), scratch_.begin(), scratch_.end());
    return true;
}

bool VectorBasis::contains(std::span<const Symbol> v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("vector dimension mismatch");
    std::copy(v.begin(), v.end(), scratch_.begin());
    return reduce() == dim_;
}

} // namespace blrc
