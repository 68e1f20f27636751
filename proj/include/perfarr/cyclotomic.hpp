#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace perfarr {

/// An exact sum of r-th roots of unity, stored as the multiplicity of each
/// power: coeffs[k] counts omega^k with omega = exp(2*pi*i/r). Addition of a
/// root is a single integer increment, which keeps the correlation inner loop
/// cheap; reduction happens only inside is_zero().
///
/// Coefficients are int64. Correlation sums contribute at most one count per
/// array cell and array volume is capped at 2^31, so accumulation cannot
/// overflow; the divisibility test below widens to 128 bits internally.
class CyclotomicValue {
public:
    explicit CyclotomicValue(std::int64_t modulus);

    /// Adopts a ready-made multiplicity vector (must have `modulus` entries).
    CyclotomicValue(std::int64_t modulus, std::vector<std::int64_t> coeffs);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Adds omega^exponent (any integer exponent, reduced mod r).
    void accumulate(std::int64_t exponent);

    /// Adds c * omega^exponent.
    void accumulate(std::int64_t exponent, std::int64_t count);

    /// Exact zero test: the value is 0 iff the coefficient polynomial is
    /// divisible by the r-th cyclotomic polynomial over the integers.
    bool is_zero() const;

    /// Double-precision evaluation, for reporting and float cross-checks.
    std::complex<double> to_complex() const;

    bool operator==(const CyclotomicValue& other) const = default;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> coeffs_;
};

/// Coefficients of the r-th cyclotomic polynomial Phi_r, ascending degree,
/// computed by exact integer division of x^r - 1 by Phi_d over the proper
/// divisors d of r. Results are cached; safe for concurrent lookup.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t r);

} // namespace perfarr
