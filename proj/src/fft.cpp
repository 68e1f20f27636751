#include "perfarr/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perfarr {

namespace {

using Cplx = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative Cooley-Tukey, n a power of two, no scaling.
void fft_pow2(std::vector<Cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const Cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Cplx u = a[i + k];
                const Cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// Bluestein: a length-n DFT as a cyclic convolution with a quadratic chirp.
// The convolution runs at a power-of-two length >= 2n-1, which is internal to
// the algorithm and exact for the length-n result.
void fft_bluestein(std::vector<Cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the angle argument small.
        const std::size_t k2 = static_cast<std::size_t>(
            (static_cast<unsigned long long>(k) * k) % (2 * n));
        const double ang = sign * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        chirp[k] = Cplx(std::cos(ang), std::sin(ang));
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<Cplx> x(m, Cplx{}), y(m, Cplx{});
    for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
    y[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);
    fft_pow2(x, false);
    fft_pow2(y, false);
    for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
    fft_pow2(x, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * scale * chirp[k];
}

} // namespace

void fft_1d(std::vector<Cplx>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n <= 1) return;
    if (is_pow2(n))
        fft_pow2(data, inverse);
    else
        fft_bluestein(data, inverse);
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (Cplx& v : data) v *= scale;
    }
}

void fft_nd(std::vector<Cplx>& data, const Shape& shape, bool inverse) {
    std::int64_t volume = 1;
    for (std::int64_t e : shape) volume *= e;
    if (volume != static_cast<std::int64_t>(data.size()))
        throw std::invalid_argument("fft_nd: buffer does not match shape");
    std::int64_t stride = 1;
    for (std::size_t axis = shape.size(); axis-- > 0;) {
        const std::int64_t extent = shape[axis];
        const std::int64_t lines = volume / extent;
        std::vector<Cplx> line(static_cast<std::size_t>(extent));
        for (std::int64_t l = 0; l < lines; ++l) {
            // Decompose the line id into the block above this axis and the
            // offset below it; elements of the line are `stride` apart.
            const std::int64_t block = l / stride;
            const std::int64_t inner = l % stride;
            const std::int64_t base = block * extent * stride + inner;
            for (std::int64_t k = 0; k < extent; ++k)
                line[static_cast<std::size_t>(k)] = data[static_cast<std::size_t>(base + k * stride)];
            fft_1d(line, inverse);
            for (std::int64_t k = 0; k < extent; ++k)
                data[static_cast<std::size_t>(base + k * stride)] = line[static_cast<std::size_t>(k)];
        }
        stride *= extent;
    }
}

std::vector<Cplx> to_complex_samples(const ExponentArray& a) {
    std::vector<Cplx> out(static_cast<std::size_t>(a.volume()));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(a.modulus());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double ang = step * static_cast<double>(a.exponent_at(static_cast<std::int64_t>(i)));
        out[i] = Cplx(std::cos(ang), std::sin(ang));
    }
    return out;
}

} // namespace perfarr
