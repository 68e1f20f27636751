#include "perfarr/checkers.hpp"

#include "perfarr/association.hpp"

#include <stdexcept>

namespace perfarr {

namespace {

constexpr const char* kLatticeNote =
    "condition-2 shifts range over the full block lattice (worked-example "
    "semantics); the definition's wording reads \"s_i mod d\"";

std::vector<ShiftVector> all_indices(const Shape& shape) {
    std::vector<ShiftVector> out;
    ShiftVector idx(shape.size(), 0);
    do {
        out.push_back(idx);
    } while (detail::next_index(idx, shape));
    return out;
}

PropertyReport gaop_core(const ExponentArray& a, const std::vector<std::int64_t>& divisors,
                         Property property) {
    PropertyReport report;
    report.property = property;
    report.divisors = divisors;
    report.volume = a.volume();
    report.note = kLatticeNote;

    const AssociatedArray assoc = associate(a, divisors);
    const std::size_t n = assoc.split;
    Shape within_shape(assoc.base.shape().begin() + static_cast<std::ptrdiff_t>(n),
                       assoc.base.shape().end());
    Shape block_shape(assoc.base.shape().begin(),
                      assoc.base.shape().begin() + static_cast<std::ptrdiff_t>(n));

    const std::vector<ShiftVector> withins = all_indices(within_shape);
    std::vector<ExponentArray> subs;
    subs.reserve(withins.size());
    for (const ShiftVector& w : withins) subs.push_back(subarray(assoc, w));

    // Condition 1: every unordered pair of distinct sub-arrays orthogonal at
    // every shift. Conjugate symmetry makes the ordered half redundant.
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
            const CorrelationTable cc = cross_correlation(subs[i], subs[j], Backend::Exact);
            for (std::int64_t s = 0; s < cc.size(); ++s) {
                if (!cc.zero_at(s)) {
                    ShiftVector shift(n, 0);
                    std::int64_t rest = s;
                    for (std::size_t t = n; t-- > 0;) {
                        shift[t] = rest % block_shape[t];
                        rest /= block_shape[t];
                    }
                    report.condition1_failures.push_back(
                        PairFailure{withins[i], withins[j], shift, cc.value_at(s)});
                }
            }
        }
    }

    // Condition 2: autocorrelations of all sub-arrays sum to zero at every
    // off-peak block-lattice shift.
    std::vector<CyclotomicValue> total(static_cast<std::size_t>(detail::checked_volume(block_shape)),
                                       CyclotomicValue(a.modulus()));
    for (const ExponentArray& sub : subs) {
        const CorrelationTable ac = autocorrelation(sub, Backend::Exact);
        for (std::int64_t s = 0; s < ac.size(); ++s) {
            const auto& coeffs = ac.exact_values()[static_cast<std::size_t>(s)].coeffs();
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                if (coeffs[k] != 0)
                    total[static_cast<std::size_t>(s)].accumulate(static_cast<std::int64_t>(k), coeffs[k]);
        }
    }
    report.summary_shape = block_shape;
    report.summary_values.reserve(total.size());
    for (const CyclotomicValue& v : total) report.summary_values.push_back(v.to_complex());
    for (std::size_t s = 1; s < total.size(); ++s) {
        if (!total[s].is_zero()) {
            ShiftVector shift(n, 0);
            std::int64_t rest = static_cast<std::int64_t>(s);
            for (std::size_t t = n; t-- > 0;) {
                shift[t] = rest % block_shape[t];
                rest /= block_shape[t];
            }
            report.condition2_failures.push_back(ShiftFailure{shift, total[s].to_complex()});
        }
    }

    report.holds = report.condition1_failures.empty() && report.condition2_failures.empty();
    return report;
}

} // namespace

PropertyReport perfect_check(const ExponentArray& a) {
    PropertyReport report;
    report.property = Property::Perfect;
    report.volume = a.volume();
    const PerfectionResult result = is_perfect(a);
    report.holds = result.perfect;
    report.witness = result.witness;
    return report;
}

PropertyReport aop_check(const ExponentArray& sequence, std::int64_t d) {
    if (sequence.dimensions() != 1)
        throw std::invalid_argument("aop_check expects a one-dimensional sequence");
    if (d < 1 || sequence.volume() % (d * d) != 0)
        throw std::invalid_argument("aop_check: length must be a multiple of d^2");
    return gaop_core(sequence, {d}, Property::Aop);
}

PropertyReport gaop_check(const ExponentArray& a, std::int64_t d) {
    return gaop_check(a, std::vector<std::int64_t>(a.dimensions(), d));
}

PropertyReport gaop_check(const ExponentArray& a, const std::vector<std::int64_t>& divisors) {
    return gaop_core(a, divisors, Property::Gaop);
}

TheoremChainReport verify_theorem_chain(const ExponentArray& a, std::int64_t d) {
    TheoremChainReport chain;
    chain.gaop = gaop_check(a, d);
    chain.array_perfect = is_perfect(a);
    chain.associated_perfect = is_perfect(associate(a, d).base);
    chain.implication_ok =
        !chain.gaop.holds || (chain.array_perfect.perfect && chain.associated_perfect.perfect);
    return chain;
}

} // namespace perfarr
