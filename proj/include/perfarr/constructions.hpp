#pragma once

#include "perfarr/exponent_array.hpp"

#include <string_view>

namespace perfarr {

/// Chu phase embedding used by the Milewski-style generators. Triangular is
/// the i(i+1)-form the reference implementation uses; Quadratic is the
/// p*i^2 proof-style variant (even r only).
enum class ChuVariant { Triangular, Quadratic };

/// Perfect polyphase sequence of length m: exponents p*i^2 over 2m roots for
/// even m, p*i(i+1)/2 over m roots for odd m. Requires gcd(p, modulus) == 1.
ExponentArray chu(std::int64_t m, std::int64_t p = 1);

/// Length n^2 over n roots: row-major flattening of the n x n array with
/// exponent i*j.
ExponentArray frank(std::int64_t n);

/// Length m^{2k+1} over m^{k+1} roots: row-major flattening of the
/// m^{k+1} x m^k array u_{i mod m} * omega^{i j}, with the Chu factor
/// embedded by scaling its exponents into the larger modulus. Requires
/// m >= 2 and k >= 1; k == 0 is an extension gated by `allow_k0`
/// (odd m only — the sequence degenerates to the Chu sequence itself).
ExponentArray milewski(std::int64_t m, std::int64_t k, std::int64_t p = 1, bool allow_k0 = false);

/// Length 4mn^{k+1} over 2mn^k roots: row-major flattening of the
/// 2mn^{k+1} x 2 array with exponent floor(i(i+j)/n). Perfection is checked
/// downstream per parameter choice, not assumed.
ExponentArray blake_floor(std::int64_t m, std::int64_t n, std::int64_t k);

/// m-dimensional perfect array of extent d^2 per axis over d roots, formed by
/// concatenating the 2m-dimensional d x ... x d generator whose exponent is
/// prod_t (w_t+1) + sum_t (b_t+1)(w_t+1); the +1 offsets reproduce the
/// reference implementation's output (ConstructionVI) bit for bit.
ExponentArray gfrank(std::int64_t d, std::int64_t m);
ExponentArray gfrank_generator(std::int64_t d, std::int64_t m);

/// 2d^2 x 2d^2 array over d roots with exponent floor((i+1)(j+1)/(2d));
/// matches ConstructionVII. Perfect for even d; odd d is a documented
/// negative and needs `allow_odd`.
ExponentArray floor2d(std::int64_t d, bool allow_odd = false);

/// 2m-dimensional generalization (ConstructionVIII), extent 2d^2 per axis,
/// exponent floor(sum_t (i_t+1)(i_{t+m}+1) / (2d)); floor_nd(d,1) == floor2d(d).
ExponentArray floor_nd(std::int64_t d, std::int64_t m, bool allow_odd = false);

/// m-dimensional array of extent r^{2k+1} per axis over r^{k+1} roots
/// (ConstructionIX): concatenation of the 2m-dimensional generator combining
/// per-axis Chu factors with the gfrank-style exponent. Perfect for even r;
/// odd r needs `allow_odd` for the concatenated form (the paper asserts
/// perfection of the generator, not of S, for odd r).
ExponentArray gmilewski(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t p = 1,
                        bool allow_odd = false, ChuVariant variant = ChuVariant::Triangular);

/// The 2m-dimensional generator S' of gmilewski (extents r^{k+1} then r^k).
ExponentArray gmilewski_generator(std::int64_t r, std::int64_t k, std::int64_t m, std::int64_t p = 1,
                                  ChuVariant variant = ChuVariant::Triangular);

/// Reference-implementation function name for a family ("ConstructionVI" for
/// gfrank, ...), empty when the family has none.
std::string_view appendix_name(std::string_view family);

} // namespace perfarr
