#include "perfarr/render.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace perfarr {

namespace {

std::int64_t gray_level(std::int64_t e, std::int64_t r) {
    if (r <= 1) return 0;
    return e * 255 / (r - 1);
}

// Hue in [0,1) at full saturation/value, rounded to integer channels.
std::array<std::int64_t, 3> hue_rgb(std::int64_t e, std::int64_t r) {
    const double h = 6.0 * static_cast<double>(e) / static_cast<double>(r);
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const auto chan = [](double x) { return static_cast<std::int64_t>(std::lround(255.0 * x)); };
    const std::int64_t q = chan(1.0 - f);
    const std::int64_t t = chan(f);
    switch (sector) {
        case 0: return {255, t, 0};
        case 1: return {q, 255, 0};
        case 2: return {0, 255, t};
        case 3: return {0, q, 255};
        case 4: return {t, 0, 255};
        default: return {255, 0, q};
    }
}

} // namespace

std::string render_image(const ExponentArray& a, const RenderSpec& spec) {
    if (a.dimensions() != 2) throw std::invalid_argument("render requires a 2-D array");
    if (spec.scale < 1) throw std::invalid_argument("render scale must be >= 1");
    if (spec.palette == Palette::Hue && spec.format != ImageFormat::Ppm)
        throw std::invalid_argument("hue palette requires the PPM format");

    const std::int64_t rows = a.shape()[0];
    const std::int64_t cols = a.shape()[1];
    const std::int64_t width = cols * spec.scale;
    const std::int64_t height = rows * spec.scale;

    std::string out;
    out += (spec.format == ImageFormat::Pgm) ? "P2\n" : "P3\n";
    out += std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    for (std::int64_t py = 0; py < height; ++py) {
        const std::int64_t i = py / spec.scale;
        for (std::int64_t px = 0; px < width; ++px) {
            const std::int64_t j = px / spec.scale;
            const std::int64_t e = a.exponent_at(i * cols + j);
            if (px > 0) out += ' ';
            if (spec.format == ImageFormat::Pgm) {
                out += std::to_string(gray_level(e, a.modulus()));
            } else if (spec.palette == Palette::Grayscale) {
                const std::int64_t g = gray_level(e, a.modulus());
                out += std::to_string(g) + " " + std::to_string(g) + " " + std::to_string(g);
            } else {
                const auto rgb = hue_rgb(e, a.modulus());
                out += std::to_string(rgb[0]) + " " + std::to_string(rgb[1]) + " " +
                       std::to_string(rgb[2]);
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace perfarr
