#include "perfarr/exponent_array.hpp"

#include <numeric>

namespace perfarr {

namespace detail {

std::int64_t checked_volume(const Shape& shape) {
    if (shape.empty()) throw std::invalid_argument("shape must be non-empty");
    std::int64_t v = 1;
    for (std::int64_t extent : shape) {
        if (extent < 1) throw std::invalid_argument("shape extents must be positive");
        if (v > (std::int64_t{1} << 31) / extent)
            throw std::invalid_argument("array volume exceeds the supported 2^31 bound");
        v *= extent;
    }
    return v;
}

} // namespace detail

ExponentArray::ExponentArray(std::int64_t modulus, Shape shape, std::vector<std::int64_t> exponents)
    : modulus_(modulus), shape_(std::move(shape)), exponents_(std::move(exponents)) {
    if (modulus_ < 1) throw std::invalid_argument("modulus must be >= 1");
    const std::int64_t volume = detail::checked_volume(shape_);
    if (volume != static_cast<std::int64_t>(exponents_.size()))
        throw std::invalid_argument("exponent count does not match product of shape");
    for (std::int64_t& e : exponents_) e = mod_floor(e, modulus_);
    strides_.assign(shape_.size(), 1);
    for (std::size_t t = shape_.size() - 1; t-- > 0;)
        strides_[t] = strides_[t + 1] * shape_[t + 1];
}

std::int64_t ExponentArray::flat_index(const ShiftVector& reduced) const {
    std::int64_t flat = 0;
    for (std::size_t t = 0; t < shape_.size(); ++t) flat += reduced[t] * strides_[t];
    return flat;
}

std::int64_t ExponentArray::entry(const ShiftVector& index) const {
    if (index.size() != shape_.size())
        throw std::invalid_argument("index has " + std::to_string(index.size()) +
                                    " components, array has " + std::to_string(shape_.size()));
    std::int64_t flat = 0;
    for (std::size_t t = 0; t < shape_.size(); ++t)
        flat += mod_floor(index[t], shape_[t]) * strides_[t];
    return exponents_[static_cast<std::size_t>(flat)];
}

ExponentArray ExponentArray::flatten_row_major() const {
    return ExponentArray(modulus_, Shape{volume()}, exponents_);
}

ExponentArray ExponentArray::reshape(Shape new_shape) const {
    if (detail::checked_volume(new_shape) != volume())
        throw std::invalid_argument("reshape must preserve volume");
    return ExponentArray(modulus_, std::move(new_shape), exponents_);
}

} // namespace perfarr
