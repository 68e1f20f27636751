#pragma once

#include "perfarr/correlation.hpp"
#include "perfarr/exponent_array.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perfarr {

enum class Property { Perfect, Aop, Gaop };

/// A condition-1 violation: two distinct within-block sub-arrays whose
/// cross-correlation is nonzero at some shift.
struct PairFailure {
    ShiftVector within_a;
    ShiftVector within_b;
    ShiftVector shift;
    std::complex<double> value;
};

/// A condition-2 violation: a block-lattice shift where the summed
/// autocorrelation of all sub-arrays is nonzero.
struct ShiftFailure {
    ShiftVector shift;
    std::complex<double> value;
};

/// Full evidence for an AOP/GAOP/perfection decision. `holds` is true iff
/// both failure lists are empty (and, for Perfect, no witness exists).
struct PropertyReport {
    Property property = Property::Perfect;
    std::vector<std::int64_t> divisors;
    bool holds = false;
    std::vector<PairFailure> condition1_failures;
    std::vector<ShiftFailure> condition2_failures;
    /// Summed autocorrelation table over the block lattice (condition 2
    /// evidence); peak at the all-zero shift equals the array volume.
    Shape summary_shape;
    std::vector<std::complex<double>> summary_values;
    /// First failing off-peak shift (Perfect property only).
    std::optional<ShiftVector> witness;
    std::int64_t volume = 0;
    std::string note;
};

/// Perfection as a PropertyReport (exact backend).
PropertyReport perfect_check(const ExponentArray& a);

/// Decides the array orthogonality property of a sequence for divisor d.
/// Length must be l*d^2; the columns of the (l*d) x d associated array must
/// be pairwise orthogonal (condition 1) and form a periodic complementary
/// set (condition 2). Exact arithmetic throughout.
PropertyReport aop_check(const ExponentArray& sequence, std::int64_t d);

/// n-dimensional generalization over the 2n-dimensional associated array.
/// Condition 2 sums the autocorrelations of all d^n sub-arrays over the full
/// block-lattice shift range, matching the worked-example semantics.
PropertyReport gaop_check(const ExponentArray& a, std::int64_t d);
PropertyReport gaop_check(const ExponentArray& a, const std::vector<std::int64_t>& divisors);

/// GAOP plus both perfection consequences: the array itself and its
/// 2n-dimensional associated array.
struct TheoremChainReport {
    PropertyReport gaop;
    PerfectionResult array_perfect;
    PerfectionResult associated_perfect;
    /// False only if GAOP holds while either perfection fails — which would
    /// be a counterexample to the implication.
    bool implication_ok = true;
};

TheoremChainReport verify_theorem_chain(const ExponentArray& a, std::int64_t d);

} // namespace perfarr
