#include "perfarr/association.hpp"

#include <stdexcept>
#include <string>

namespace perfarr {

AssociatedArray associate(const ExponentArray& a, std::int64_t d) {
    return associate(a, std::vector<std::int64_t>(a.dimensions(), d));
}

AssociatedArray associate(const ExponentArray& a, const std::vector<std::int64_t>& divisors) {
    const std::size_t n = a.dimensions();
    if (divisors.size() != n) throw std::invalid_argument("one divisor per dimension required");
    Shape blocked(2 * n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::int64_t d = divisors[t];
        if (d < 1 || a.shape()[t] % d != 0)
            throw std::invalid_argument("divisor " + std::to_string(d) +
                                        " does not divide extent " + std::to_string(a.shape()[t]));
        blocked[t] = a.shape()[t] / d;
        blocked[n + t] = d;
    }
    std::vector<std::int64_t> exps(static_cast<std::size_t>(a.volume()));
    ShiftVector idx(2 * n, 0);
    ShiftVector orig(n, 0);
    std::int64_t flat = 0;
    do {
        for (std::size_t t = 0; t < n; ++t) orig[t] = idx[t] * blocked[n + t] + idx[n + t];
        exps[static_cast<std::size_t>(flat++)] = a.entry(orig);
    } while (detail::next_index(idx, blocked));
    return AssociatedArray{ExponentArray(a.modulus(), std::move(blocked), std::move(exps)),
                           n};
}

ExponentArray concatenate(const AssociatedArray& assoc) {
    const std::size_t n = assoc.split;
    const ExponentArray& base = assoc.base;
    Shape big(n);
    std::vector<std::int64_t> strides(n, 1);
    for (std::size_t t = 0; t < n; ++t) big[t] = assoc.blocks(t) * assoc.divisor(t);
    for (std::size_t t = n - 1; t-- > 0;) strides[t] = strides[t + 1] * big[t + 1];
    std::vector<std::int64_t> exps(static_cast<std::size_t>(base.volume()));
    ShiftVector idx(2 * n, 0);
    std::int64_t flat = 0;
    do {
        std::int64_t target = 0;
        for (std::size_t t = 0; t < n; ++t)
            target += (idx[t] * assoc.divisor(t) + idx[n + t]) * strides[t];
        exps[static_cast<std::size_t>(target)] = base.exponent_at(flat++);
    } while (detail::next_index(idx, base.shape()));
    return ExponentArray(base.modulus(), std::move(big), std::move(exps));
}

AssociatedArray as_associated(ExponentArray base_2n) {
    if (base_2n.dimensions() % 2 != 0)
        throw std::invalid_argument("a generator array must have an even dimension count");
    const std::size_t n = base_2n.dimensions() / 2;
    return AssociatedArray{std::move(base_2n), n};
}

ExponentArray subarray(const AssociatedArray& assoc, const ShiftVector& within) {
    const std::size_t n = assoc.split;
    if (within.size() != n) throw std::invalid_argument("within-block vector has wrong dimension");
    for (std::size_t t = 0; t < n; ++t)
        if (within[t] < 0 || within[t] >= assoc.divisor(t))
            throw std::invalid_argument("within-block coordinate out of range");
    Shape shape(assoc.base.shape().begin(), assoc.base.shape().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::int64_t> exps(static_cast<std::size_t>(detail::checked_volume(shape)));
    ShiftVector idx(2 * n, 0);
    for (std::size_t t = 0; t < n; ++t) idx[n + t] = within[t];
    std::int64_t flat = 0;
    ShiftVector block(n, 0);
    do {
        for (std::size_t t = 0; t < n; ++t) idx[t] = block[t];
        exps[static_cast<std::size_t>(flat++)] = assoc.base.exponent_at(assoc.base.flat_index(idx));
    } while (detail::next_index(block, shape));
    return ExponentArray(assoc.base.modulus(), std::move(shape), std::move(exps));
}

} // namespace perfarr
