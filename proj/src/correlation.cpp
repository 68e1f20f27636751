#include "perfarr/correlation.hpp"

#include "perfarr/fft.hpp"
#include "perfarr/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace perfarr {

namespace {

ShiftVector decode_shift(std::int64_t flat, const Shape& shape) {
    ShiftVector s(shape.size(), 0);
    for (std::size_t t = shape.size(); t-- > 0;) {
        s[t] = flat % shape[t];
        flat /= shape[t];
    }
    return s;
}

// Per-axis contribution of the shifted coordinate to b's flat index:
// table[t][i] = ((i + shift[t]) mod l_t) * stride_t.
std::vector<std::vector<std::int64_t>> shifted_tables(const ExponentArray& b, const ShiftVector& shift) {
    const Shape& shape = b.shape();
    std::vector<std::vector<std::int64_t>> tables(shape.size());
    for (std::size_t t = 0; t < shape.size(); ++t) {
        tables[t].resize(static_cast<std::size_t>(shape[t]));
        const std::int64_t s = mod_floor(shift[t], shape[t]);
        for (std::int64_t i = 0; i < shape[t]; ++i)
            tables[t][static_cast<std::size_t>(i)] = ((i + s) % shape[t]) * b.strides()[t];
    }
    return tables;
}

// Sum over all cells of omega^{a[i] - b[i+shift]} as a coefficient histogram.
void correlate_one_shift(const ExponentArray& a, const ExponentArray& b, const ShiftVector& shift,
                         std::vector<std::int64_t>& counts) {
    const Shape& shape = a.shape();
    const std::size_t dims = shape.size();
    const std::int64_t volume = a.volume();
    const std::int64_t r = a.modulus();
    std::fill(counts.begin(), counts.end(), 0);
    const auto tables = shifted_tables(b, shift);
    ShiftVector idx(dims, 0);
    std::int64_t jflat = 0;
    for (std::size_t t = 0; t < dims; ++t) jflat += tables[t][0];
    for (std::int64_t i = 0; i < volume; ++i) {
        std::int64_t diff = a.exponent_at(i) - b.exponent_at(jflat);
        if (diff < 0) diff += r;
        ++counts[static_cast<std::size_t>(diff)];
        for (std::size_t t = dims; t-- > 0;) {
            jflat -= tables[t][static_cast<std::size_t>(idx[t])];
            if (++idx[t] < shape[t]) {
                jflat += tables[t][static_cast<std::size_t>(idx[t])];
                break;
            }
            idx[t] = 0;
            jflat += tables[t][0];
        }
    }
}

void require_compatible(const ExponentArray& a, const ExponentArray& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("correlation requires equal shapes");
    if (a.modulus() != b.modulus()) throw std::invalid_argument("correlation requires equal moduli");
}

} // namespace

CorrelationTable::CorrelationTable(Shape shape, Backend backend, std::int64_t volume)
    : shape_(std::move(shape)), backend_(backend), volume_(volume) {}

std::complex<double> CorrelationTable::value(const ShiftVector& shift) const {
    if (shift.size() != shape_.size()) throw std::invalid_argument("shift dimension mismatch");
    std::int64_t flat = 0;
    for (std::size_t t = 0; t < shape_.size(); ++t)
        flat = flat * shape_[t] + mod_floor(shift[t], shape_[t]);
    return values_[static_cast<std::size_t>(flat)];
}

bool CorrelationTable::zero_at(std::int64_t flat) const {
    if (backend_ == Backend::Exact) return exact_[static_cast<std::size_t>(flat)].is_zero();
    return std::abs(values_[static_cast<std::size_t>(flat)]) <= 1e-6 * static_cast<double>(volume_);
}

std::vector<ShiftVector> CorrelationTable::nonzero_shifts() const {
    std::vector<ShiftVector> out;
    for (std::int64_t i = 0; i < size(); ++i)
        if (!zero_at(i)) out.push_back(decode_shift(i, shape_));
    return out;
}

CorrelationTable cross_correlation(const ExponentArray& a, const ExponentArray& b, Backend backend) {
    require_compatible(a, b);
    const std::int64_t volume = a.volume();
    CorrelationTable table(a.shape(), backend, volume);

    if (backend == Backend::Exact) {
        table.exact_.assign(static_cast<std::size_t>(volume), CyclotomicValue(a.modulus()));
        table.values_.assign(static_cast<std::size_t>(volume), {});
        parallel_for(volume, [&](std::int64_t begin, std::int64_t end) {
            std::vector<std::int64_t> counts(static_cast<std::size_t>(a.modulus()));
            for (std::int64_t s = begin; s < end; ++s) {
                correlate_one_shift(a, b, decode_shift(s, a.shape()), counts);
                table.exact_[static_cast<std::size_t>(s)] =
                    CyclotomicValue(a.modulus(), counts);
                table.values_[static_cast<std::size_t>(s)] =
                    table.exact_[static_cast<std::size_t>(s)].to_complex();
            }
        });
        return table;
    }

    // theta(s) = conj(idft(conj(dft(a)) . dft(b)))(s); all transforms at the
    // exact extents, so the cyclic structure is preserved.
    auto fa = to_complex_samples(a);
    auto fb = to_complex_samples(b);
    fft_nd(fa, a.shape(), false);
    fft_nd(fb, a.shape(), false);
    for (std::size_t k = 0; k < fa.size(); ++k) fa[k] = std::conj(fa[k]) * fb[k];
    fft_nd(fa, a.shape(), true);
    for (auto& v : fa) v = std::conj(v);
    table.values_ = std::move(fa);
    return table;
}

CorrelationTable autocorrelation(const ExponentArray& a, Backend backend) {
    return cross_correlation(a, a, backend);
}

PerfectionResult is_perfect(const ExponentArray& a) {
    const std::int64_t volume = a.volume();
    std::atomic<std::int64_t> first_fail{std::numeric_limits<std::int64_t>::max()};
    parallel_for(volume, [&](std::int64_t begin, std::int64_t end) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(a.modulus()));
        for (std::int64_t s = begin; s < end; ++s) {
            if (s == 0) continue; // the peak
            if (s >= first_fail.load(std::memory_order_relaxed)) break;
            correlate_one_shift(a, a, decode_shift(s, a.shape()), counts);
            if (!CyclotomicValue(a.modulus(), counts).is_zero()) {
                std::int64_t seen = first_fail.load(std::memory_order_relaxed);
                while (s < seen && !first_fail.compare_exchange_weak(seen, s)) {
                }
                break;
            }
        }
    });
    const std::int64_t fail = first_fail.load();
    if (fail == std::numeric_limits<std::int64_t>::max()) return {true, std::nullopt};
    return {false, decode_shift(fail, a.shape())};
}

BenchReport bench_correlation(const Shape& shape, std::int64_t modulus, int repetitions,
                              std::int64_t volume_cap) {
    const std::int64_t volume = detail::checked_volume(shape);
    if (volume > volume_cap) throw std::invalid_argument("bench shape exceeds the volume cap");
    if (repetitions < 1) throw std::invalid_argument("bench needs at least one repetition");

    // Deterministic pseudo-random exponent array derived from the parameters.
    std::seed_seq seed{static_cast<std::uint64_t>(modulus),
                       static_cast<std::uint64_t>(shape.size()),
                       static_cast<std::uint64_t>(volume)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(0, modulus - 1);
    std::vector<std::int64_t> exps(static_cast<std::size_t>(volume));
    for (auto& e : exps) e = dist(rng);
    const ExponentArray a(modulus, shape, std::move(exps));

    BenchReport report;
    report.shape = shape;
    report.modulus = modulus;
    report.volume = volume;
    report.repetitions = repetitions;
    report.deviation_bound = 1e-6 * static_cast<double>(volume);

    using Clock = std::chrono::steady_clock;
    CorrelationTable exact = autocorrelation(a, Backend::Exact);
    CorrelationTable fft = autocorrelation(a, Backend::Fft);
    for (std::int64_t i = 0; i < volume; ++i)
        report.max_deviation = std::max(report.max_deviation, std::abs(exact.value_at(i) - fft.value_at(i)));
    if (report.max_deviation > report.deviation_bound)
        throw std::runtime_error("backend deviation exceeds 1e-6 * volume; refusing to report timings");

    for (int rep = 0; rep < repetitions; ++rep) {
        auto t0 = Clock::now();
        autocorrelation(a, Backend::Exact);
        auto t1 = Clock::now();
        autocorrelation(a, Backend::Fft);
        auto t2 = Clock::now();
        report.exact_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
        report.fft_seconds.push_back(std::chrono::duration<double>(t2 - t1).count());
    }
    return report;
}

double parseval_relative_error(const ExponentArray& a) {
    auto f = to_complex_samples(a);
    fft_nd(f, a.shape(), false);
    double quartic = 0.0;
    for (const auto& v : f) quartic += std::norm(v) * std::norm(v);
    const CorrelationTable table = autocorrelation(a, Backend::Fft);
    double corr_energy = 0.0;
    for (const auto& v : table.complex_values()) corr_energy += std::norm(v);
    corr_energy *= static_cast<double>(a.volume());
    const double denom = std::max(quartic, 1.0);
    return std::abs(corr_energy - quartic) / denom;
}

} // namespace perfarr
