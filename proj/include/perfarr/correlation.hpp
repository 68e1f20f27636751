#pragma once

#include "perfarr/cyclotomic.hpp"
#include "perfarr/exponent_array.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace perfarr {

enum class Backend { Exact, Fft };

/// Periodic correlation values theta(s) = sum_i omega^{a[i] - b[i+s]} for
/// every shift vector s in the full lattice [0,l_0) x ... x [0,l_{N-1}),
/// stored row-major. The exact backend keeps CyclotomicValues (decidable
/// zero test); the fft backend keeps complex doubles only.
class CorrelationTable {
public:
    CorrelationTable(Shape shape, Backend backend, std::int64_t volume);

    const Shape& shape() const { return shape_; }
    Backend backend() const { return backend_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    /// Complex value at a row-major flat shift offset.
    std::complex<double> value_at(std::int64_t flat) const { return values_[static_cast<std::size_t>(flat)]; }

    /// Complex value at a shift vector (components reduced cyclically).
    std::complex<double> value(const ShiftVector& shift) const;

    /// Exact zero test for the exact backend; |v| <= 1e-6 * volume otherwise.
    bool zero_at(std::int64_t flat) const;

    /// Shifts with nonzero value, row-major order.
    std::vector<ShiftVector> nonzero_shifts() const;

    const std::vector<CyclotomicValue>& exact_values() const { return exact_; }
    const std::vector<std::complex<double>>& complex_values() const { return values_; }

    // Populated by the correlation routines.
    std::vector<CyclotomicValue> exact_;
    std::vector<std::complex<double>> values_;

private:
    Shape shape_;
    Backend backend_;
    std::int64_t volume_;
};

/// All-shift periodic cross-correlation. Arrays must share shape and modulus.
CorrelationTable cross_correlation(const ExponentArray& a, const ExponentArray& b,
                                   Backend backend = Backend::Exact);

CorrelationTable autocorrelation(const ExponentArray& a, Backend backend = Backend::Exact);

struct PerfectionResult {
    bool perfect = false;
    /// First off-peak shift (row-major order) with nonzero autocorrelation.
    std::optional<ShiftVector> witness;
};

/// Exact decision: every off-peak autocorrelation is zero. No tolerance.
PerfectionResult is_perfect(const ExponentArray& a);

struct BenchReport {
    Shape shape;
    std::int64_t modulus = 0;
    std::int64_t volume = 0;
    int repetitions = 0;
    std::vector<double> exact_seconds;
    std::vector<double> fft_seconds;
    double max_deviation = 0.0; // max entrywise |exact - fft|
    double deviation_bound = 0.0; // 1e-6 * volume
};

/// Times both backends on a deterministic pseudo-random array and checks the
/// entrywise agreement bound before reporting. Throws if volume exceeds the cap.
BenchReport bench_correlation(const Shape& shape, std::int64_t modulus, int repetitions,
                              std::int64_t volume_cap = std::int64_t{1} << 22);

/// Relative error of the DFT power identity sum_s |theta(s)|^2 * V == sum_k |A_k|^4
/// on the fft autocorrelation path; an internal self-test of that backend.
double parseval_relative_error(const ExponentArray& a);

} // namespace perfarr
