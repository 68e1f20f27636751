#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfarr {

/// Multi-index / per-dimension cyclic shift. One entry per dimension;
/// components may be any integer and are reduced modulo the matching extent.
using ShiftVector = std::vector<std::int64_t>;
using Shape = std::vector<std::int64_t>;

/// Mathematical modulus: result always in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// An N-dimensional array over the r-th roots of unity in index notation:
/// the stored integer e at a cell denotes the value omega^e with
/// omega = exp(2*pi*i/r). Exponents are kept reduced into [0, r).
/// Immutable after construction; storage is row-major (last index fastest).
class ExponentArray {
public:
    /// Validates and reduces. `exponents` must have product(shape) entries;
    /// modulus >= 1; shape non-empty with positive extents.
    ExponentArray(std::int64_t modulus, Shape shape, std::vector<std::int64_t> exponents);

    std::int64_t modulus() const { return modulus_; }
    const Shape& shape() const { return shape_; }
    std::size_t dimensions() const { return shape_.size(); }
    std::int64_t volume() const { return static_cast<std::int64_t>(exponents_.size()); }
    std::span<const std::int64_t> exponents() const { return exponents_; }

    /// Exponent at a multi-index; components are reduced cyclically, so any
    /// integer (negative included) is a legal coordinate.
    std::int64_t entry(const ShiftVector& index) const;

    /// Exponent at a row-major flat offset in [0, volume).
    std::int64_t exponent_at(std::int64_t flat) const { return exponents_[static_cast<std::size_t>(flat)]; }

    /// Row-major (last index fastest) linearization; modulus preserved.
    ExponentArray flatten_row_major() const;

    /// Same entries reinterpreted under a new shape of equal volume.
    ExponentArray reshape(Shape new_shape) const;

    /// Row-major strides (stride of the last dimension is 1).
    const std::vector<std::int64_t>& strides() const { return strides_; }

    /// Flat offset of a multi-index already reduced into range.
    std::int64_t flat_index(const ShiftVector& reduced) const;

    bool operator==(const ExponentArray& other) const = default;

private:
    std::int64_t modulus_;
    Shape shape_;
    std::vector<std::int64_t> exponents_;
    std::vector<std::int64_t> strides_;
};

/// Factory mirroring the constructor; reads as a verb at call sites.
inline ExponentArray make_array(std::int64_t modulus, Shape shape, std::vector<std::int64_t> exponents) {
    return ExponentArray(modulus, std::move(shape), std::move(exponents));
}

namespace detail {

/// Odometer increment of a row-major multi-index; returns false on wrap.
inline bool next_index(ShiftVector& idx, const Shape& shape) {
    for (std::size_t t = shape.size(); t-- > 0;) {
        if (++idx[t] < shape[t]) return true;
        idx[t] = 0;
    }
    return false;
}

std::int64_t checked_volume(const Shape& shape);

} // namespace detail

} // namespace perfarr
