#pragma once

#include "perfarr/exponent_array.hpp"

namespace perfarr {

/// The 2n-dimensional reshape of an n-dimensional array into block and
/// within-block coordinates: base[q_0..q_{n-1}, w_0..w_{n-1}] holds the entry
/// of the original array at (q_0*d_0 + w_0, ..., q_{n-1}*d_{n-1} + w_{n-1}).
/// Dimensions 0..n-1 of `base` are block coordinates (extent m_t/d_t),
/// dimensions n..2n-1 are within-block coordinates (extent d_t).
struct AssociatedArray {
    ExponentArray base;
    std::size_t split; // n

    std::int64_t divisor(std::size_t axis) const { return base.shape()[split + axis]; }
    std::int64_t blocks(std::size_t axis) const { return base.shape()[axis]; }
};

/// Blocks an n-dim array for a uniform divisor d (d must divide every extent).
AssociatedArray associate(const ExponentArray& a, std::int64_t d);

/// Per-dimension divisor variant with identical semantics per axis.
AssociatedArray associate(const ExponentArray& a, const std::vector<std::int64_t>& divisors);

/// Exact inverse of associate: concatenates the blocks back into the n-dim
/// array of extents blocks(t) * divisor(t).
ExponentArray concatenate(const AssociatedArray& assoc);

/// Wraps an already 2n-dimensional generator array (first half block axes,
/// second half within axes) so it can be concatenated.
AssociatedArray as_associated(ExponentArray base_2n);

/// The n-dim sub-array obtained by fixing the within-block coordinates.
ExponentArray subarray(const AssociatedArray& assoc, const ShiftVector& within);

} // namespace perfarr
