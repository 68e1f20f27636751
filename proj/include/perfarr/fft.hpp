#pragma once

#include "perfarr/exponent_array.hpp"

#include <complex>
#include <vector>

namespace perfarr {

/// In-place complex DFT of arbitrary length: iterative radix-2 for powers of
/// two, Bluestein's chirp-z otherwise. Every extent is transformed at its
/// exact length; there is no padding of the outer transform, so cyclic
/// semantics are preserved for any shape. `inverse` includes the 1/n scale.
void fft_1d(std::vector<std::complex<double>>& data, bool inverse);

/// N-dimensional DFT over a row-major buffer, one axis at a time.
void fft_nd(std::vector<std::complex<double>>& data, const Shape& shape, bool inverse);

/// Complex samples omega^{e} of an exponent array, row-major.
std::vector<std::complex<double>> to_complex_samples(const ExponentArray& a);

} // namespace perfarr
