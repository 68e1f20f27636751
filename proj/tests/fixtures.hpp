#pragma once

// Frozen reference arrays used by the unit and acceptance suites.

#include "perfarr/exponent_array.hpp"

#include <vector>

namespace fixtures {

using perfarr::ExponentArray;

/// The length-16 Frank sequence over 4 roots, index notation.
inline const std::vector<std::int64_t> kFrank16 = {0, 0, 0, 0, 0, 1, 2, 3,
                                                   0, 2, 0, 2, 0, 3, 2, 1};

inline ExponentArray frank16_sequence() { return ExponentArray(4, {16}, kFrank16); }

/// The 9x9 array over 3 roots (extent-9 axes, divisor 3).
inline ExponentArray grid9x9() {
    return ExponentArray(3, {9, 9},
                         {0, 2, 1, 1, 1, 1, 2, 0, 1,
                          2, 2, 2, 0, 1, 2, 1, 0, 2,
                          1, 2, 0, 2, 1, 0, 0, 0, 0,
                          1, 0, 2, 2, 2, 2, 0, 1, 2,
                          1, 1, 1, 2, 0, 1, 0, 2, 1,
                          1, 2, 0, 2, 1, 0, 0, 0, 0,
                          2, 1, 0, 0, 0, 0, 1, 2, 0,
                          0, 0, 0, 1, 2, 0, 2, 1, 0,
                          1, 2, 0, 2, 1, 0, 0, 0, 0});
}

/// The 4-dimensional binary array of extent 4 per axis: 4x4 blocks indexed by
/// the first two coordinates, each a 4x4 matrix in the last two.
inline ExponentArray binary4d() {
    const std::int64_t B[4][4][4][4] = {
        {{{1, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}},
         {{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}},
         {{0, 0, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}},
         {{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}},
        {{{0, 0, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
         {{1, 1, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}},
        {{{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}},
         {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}}};
    std::vector<std::int64_t> exps;
    exps.reserve(256);
    for (int i0 = 0; i0 < 4; ++i0)
        for (int i1 = 0; i1 < 4; ++i1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int i3 = 0; i3 < 4; ++i3) exps.push_back(B[i0][i1][i2][i3]);
    return ExponentArray(2, {4, 4, 4, 4}, exps);
}

/// The 8x8 binary array (floor construction, d = 2).
inline ExponentArray binary8x8() {
    return ExponentArray(2, {8, 8},
                         {0, 0, 0, 1, 1, 1, 1, 0,
                          0, 1, 1, 0, 0, 1, 1, 0,
                          0, 1, 0, 1, 1, 0, 1, 0,
                          1, 0, 1, 0, 1, 0, 1, 0,
                          1, 0, 1, 1, 0, 1, 0, 0,
                          1, 1, 0, 0, 1, 1, 0, 0,
                          1, 1, 1, 1, 0, 0, 0, 0,
                          0, 0, 0, 0, 0, 0, 0, 0});
}

} // namespace fixtures
