#pragma once

#include "perfarr/exponent_array.hpp"

#include <string>

namespace perfarr {

enum class Palette { Grayscale, Hue };
enum class ImageFormat { Pgm, Ppm };

/// How a 2-D exponent array becomes pixels. Grayscale maps exponent e to
/// level floor(e * 255 / (r - 1)) (0 when r == 1); hue spreads the exponents
/// around the color wheel. `scale` replicates each cell into a scale x scale
/// pixel block.
struct RenderSpec {
    Palette palette = Palette::Grayscale;
    std::int64_t scale = 1;
    ImageFormat format = ImageFormat::Pgm;
};

/// Deterministic ASCII PGM (P2) / PPM (P3) bytes for a 2-D array. Identical
/// input and spec always produce identical bytes. Hue requires PPM.
std::string render_image(const ExponentArray& a, const RenderSpec& spec);

} // namespace perfarr
