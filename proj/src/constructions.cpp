#include "perfarr/constructions.hpp"

#include "perfarr/association.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace perfarr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < exp; ++i) v *= base;
    return v;
}

// Chu phase of index i expressed over `modulus` roots; chu_mod is the
// sequence's native modulus (2m even / m odd) and must divide `modulus`.
std::int64_t chu_exponent(std::int64_t i, std::int64_t m, std::int64_t p) {
    if (m % 2 == 0) return mod_floor(p * i * i, 2 * m);
    return mod_floor(p * (i * (i + 1) / 2), m);
}

} // namespace

ExponentArray chu(std::int64_t m, std::int64_t p) {
    require(m >= 1, "chu: length must be >= 1");
    const std::int64_t modulus = (m % 2 == 0) ? 2 * m : m;
    require(std::gcd(p, modulus) == 1, "chu: p must be coprime to the modulus");
    std::vector<std::int64_t> exps(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) exps[static_cast<std::size_t>(i)] = chu_exponent(i, m, p);
    return ExponentArray(modulus, {m}, std::move(exps));
}

ExponentArray frank(std::int64_t n) {
    require(n >= 1, "frank: side must be >= 1");
    std::vector<std::int64_t> exps(static_cast<std::size_t>(n * n));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            exps[static_cast<std::size_t>(n * i + j)] = (i * j) % n;
    return ExponentArray(n, {n * n}, std::move(exps));
}

ExponentArray milewski(std::int64_t m, std::int64_t k, std::int64_t p, bool allow_k0) {
    require(m >= 2, "milewski: m must be >= 2");
    require(k >= 1 || (k == 0 && allow_k0), "milewski: k must be >= 1 (k == 0 only as a flagged extension)");
    require(k >= 0, "milewski: k must be >= 0");
    const std::int64_t chu_mod = (m % 2 == 0) ? 2 * m : m;
    require(std::gcd(p, chu_mod) == 1, "milewski: p must be coprime to the Chu modulus");
    const std::int64_t modulus = ipow(m, k + 1);
    require(modulus % chu_mod == 0,
            "milewski: k == 0 with even m cannot embed the Chu factor over m roots");
    const std::int64_t scale = modulus / chu_mod;
    const std::int64_t rows = ipow(m, k + 1);
    const std::int64_t cols = ipow(m, k);
    std::vector<std::int64_t> exps;
    exps.reserve(static_cast<std::size_t>(rows * cols));
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::int64_t u = chu_exponent(i % m, m, p) * scale;
        for (std::int64_t j = 0; j < cols; ++j) exps.push_back((u + i * j) % modulus);
    }
    return ExponentArray(modulus, {rows * cols}, std::move(exps));
}

ExponentArray blake_floor(std::int64_t m, std::int64_t n, std::int64_t k) {
    require(m >= 1 && n >= 1, "blake_floor: m and n must be >= 1");
    require(k >= 0, "blake_floor: k must be >= 0");
    const std::int64_t modulus = 2 * m * ipow(n, k);
    const std::int64_t rows = 2 * m * ipow(n, k + 1);
    std::vector<std::int64_t> exps;
    exps.reserve(static_cast<std::size_t>(rows * 2));
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t j = 0; j < 2; ++j)
            exps.push_back((i * (i + j) / n) % modulus);
    return ExponentArray(modulus, {rows * 2}, std::move(exps));
}

ExponentArray gfrank_generator(std::int64_t d, std::int64_t m) {
    require(d >= 1, "gfrank: d must be >= 1");
    require(m >= 1, "gfrank: m must be >= 1");
    Shape shape(static_cast<std::size_t>(2 * m), d);
    std::vector<std::int64_t> exps(static_cast<std::size_t>(detail::checked_volume(shape)));
    ShiftVector idx(static_cast<std::size_t>(2 * m), 0);
    std::int64_t flat = 0;
    do {
        std::int64_t prod = 1;
        std::int64_t sum = 0;
        for (std::int64_t t = 0; t < m; ++t) {
            prod = (prod * ((idx[static_cast<std::size_t>(m + t)] + 1) % d)) % d;
            sum += (idx[static_cast<std::size_t>(t)] + 1) * (idx[static_cast<std::size_t>(m + t)] + 1);
        }
        exps[static_cast<std::size_t>(flat++)] = mod_floor(prod + sum, d);
    } while (detail::next_index(idx, shape));
    return ExponentArray(d, std::move(shape), std::move(exps));
}

ExponentArray gfrank(std::int64_t d, std::int64_t m) {
    return concatenate(as_associated(gfrank_generator(d, m)));
}

ExponentArray floor2d(std::int64_t d, bool allow_odd) {
    require(d >= 1, "floor2d: d must be >= 1");
    require(d % 2 == 0 || allow_odd, "floor2d: d must be even (odd d is not perfect; pass the override)");
    const std::int64_t side = 2 * d * d;
    std::vector<std::int64_t> exps(static_cast<std::size_t>(side * side));
    for (std::int64_t i = 0; i < side; ++i)
        for (std::int64_t j = 0; j < side; ++j)
            exps[static_cast<std::size_t>(i * side + j)] = ((i + 1) * (j + 1) / (2 * d)) % d;
    return ExponentArray(d, {side, side}, std::move(exps));
}

ExponentArray floor_nd(std::int64_t d, std::int64_t m, bool allow_odd) {
    require(d >= 1, "floor_nd: d must be >= 1");
    require(m >= 1, "floor_nd: m must be >= 1");
    require(d % 2 == 0 || allow_odd, "floor_nd: d must be even (odd d is not perfect; pass the override)");
    const std::int64_t side = 2 * d * d;
    Shape shape(static_cast<std::size_t>(2 * m), side);
    std::vector<std::int64_t> exps(static_cast<std::size_t>(detail::checked_volume(shape)));
    ShiftVector idx(static_cast<std::size_t>(2 * m), 0);
    std::int64_t flat = 0;
    do {
        std::int64_t sum = 0;
        for (std::int64_t t = 0; t < m; ++t)
            sum += (idx[static_cast<std::size_t>(t)] + 1) * (idx[static_cast<std::size_t>(t + m)] + 1);
        exps[static_cast<std::size_t>(flat++)] = (sum / (2 * d)) % d;
    } while (detail::next_index(idx, shape));
    return ExponentArray(d, std::move(shape), std::move(exps));
}

ExponentArray gmilewski_generator(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t p,
                                  ChuVariant variant) {
    require(r >= 2, "gmilewski: r must be >= 2");
    require(k >= 1, "gmilewski: k must be >= 1");
    require(m >= 1, "gmilewski: m must be >= 1");
    require(std::gcd(p, r) == 1, "gmilewski: p must be coprime to r");
    require(variant == ChuVariant::Triangular || r % 2 == 0,
            "gmilewski: the quadratic Chu variant requires even r");
    const std::int64_t modulus = ipow(r, k + 1);
    const std::int64_t rk = ipow(r, k);
    Shape shape(static_cast<std::size_t>(2 * m));
    for (std::int64_t t = 0; t < m; ++t) shape[static_cast<std::size_t>(t)] = modulus;
    for (std::int64_t t = 0; t < m; ++t) shape[static_cast<std::size_t>(m + t)] = rk;
    // Chu phase of a block index i, embedded over r^{k+1} roots. The phase
    // depends on i(i+1) (or i^2) only modulo 2r, which keeps the products in
    // int64 range for any supported volume.
    const std::int64_t pr = mod_floor(p, 2 * r);
    const auto chu_phase = [&](std::int64_t i) {
        if (variant == ChuVariant::Quadratic) {
            const std::int64_t sq = (i % (2 * r)) * (i % (2 * r)) % (2 * r);
            return pr * sq % (2 * r) * (rk / 2) % modulus;
        }
        if (r % 2 == 0) {
            const std::int64_t tri = i % (2 * r) * ((i + 1) % (2 * r)) % (2 * r);
            return pr * tri % (2 * r) * (rk / 2) % modulus;
        }
        const std::int64_t tri = i % r * ((i + 1) % r) % r;
        return pr * tri % r * rk % modulus;
    };
    std::vector<std::int64_t> exps(static_cast<std::size_t>(detail::checked_volume(shape)));
    ShiftVector idx(static_cast<std::size_t>(2 * m), 0);
    std::int64_t flat = 0;
    do {
        std::int64_t e = 0;
        std::int64_t prod = 1;
        for (std::int64_t t = 0; t < m; ++t) {
            e = (e + chu_phase(idx[static_cast<std::size_t>(t)])) % modulus;
            e = (e + idx[static_cast<std::size_t>(t)] % modulus * idx[static_cast<std::size_t>(m + t)]) % modulus;
            prod = prod * idx[static_cast<std::size_t>(m + t)] % modulus;
        }
        exps[static_cast<std::size_t>(flat++)] = mod_floor(e + prod, modulus);
    } while (detail::next_index(idx, shape));
    return ExponentArray(modulus, std::move(shape), std::move(exps));
}

ExponentArray gmilewski(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t p,
                        bool allow_odd, ChuVariant variant) {
    require(r % 2 == 0 || allow_odd,
            "gmilewski: concatenated form requires even r (odd r is not asserted perfect; pass the override)");
    return concatenate(as_associated(gmilewski_generator(r, k, m, p, variant)));
}

std::string_view appendix_name(std::string_view family) {
    if (family == "gfrank") return "ConstructionVI";
    if (family == "floor2d") return "ConstructionVII";
    if (family == "floor_nd") return "ConstructionVIII";
    if (family == "gmilewski") return "ConstructionIX";
    return {};
}

} // namespace perfarr
