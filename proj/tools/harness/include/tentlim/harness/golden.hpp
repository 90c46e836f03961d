#pragma once

#include <vector>

#include "tentlim/numeric.hpp"

// Printed folding-pattern data for the Fibonacci map, typed in entry by entry.
namespace tentlim::harness::golden {

// Fibonacci cutting times S_0..S_7
inline const std::vector<long long> kFibonacciCuttingTimes{1, 2, 3, 5, 8, 13, 21, 34};

// Start of FP(C0)
inline const std::vector<Level> kC0Prefix{kInf, 0, 1, 0, 2, 0, 1};

// Arc x^0..x^33 with a basic quasi-symmetric [x^2, x^6] inside the quasi-symmetric [x^2, x^30]
inline const std::vector<Level> kQuasiArc{27, 6, 1, 14, 1, 6, 1, 0, 3, 0, 1, 0, 2, 0, 1, 4, 1,
                                          9,  1, 4, 1,  0, 2, 0, 1, 0, 3, 0, 1, 6, 1, 0, 3, 0};
// The part of kQuasiArc that the generated pattern contains (x^2 onwards)
inline const std::vector<Level> kGoldenWindow(kQuasiArc.begin() + 2, kQuasiArc.end());

// Basic decreasing quasi-symmetric arc y^0..y^12; nodes y^2, y^6, y^9, y^11, y^12
inline const std::vector<Level> kDecreasingBasic{1, 22, 77, 22, 1, 9, 43, 9, 1, 22, 1, 9, 1};

// Non-basic decreasing arc y^0..y^72; nodes y^3, y^23, y^41, y^57, y^72
inline const std::vector<Level> kDecreasingNonBasic{
    1, 22, 1, 56, 1, 22, 1, 9, 1, 4, 1, 0, 2, 0, 1, 0, 3, 0, 1,  6, 1, 14, 1, 35, 1,
    14, 1, 6, 1, 0, 3, 0, 1, 0, 2, 0, 1, 4, 1, 9, 1, 22, 1, 9, 1, 4, 1, 0, 2, 0,
    1, 0, 3, 0, 1, 6, 1, 14, 1, 6, 1, 0, 3, 0, 1, 0, 2, 0, 1, 4, 1, 9, 1};

// Two quasi-symmetric arcs glued at y^9 that do not form a decreasing chain, y^0..y^40
inline const std::vector<Level> kNotDecreasing{1, 22, 77, 22, 1, 9, 43, 9, 1, 22, 1, 9, 1, 4, 1, 0, 2, 0, 1, 0, 3,
                                               0, 1, 6, 1, 14, 1, 6, 1, 0, 3, 0, 1, 0, 2, 0, 1, 4, 1, 9, 1};

// Levels the examples put in a common link
inline const std::vector<std::vector<Level>> kLinkGroups{{1, 14, 22, 35, 56, 77}, {9, 43}};
inline constexpr int kLinkGroupDepth = 80;

}  // namespace tentlim::harness::golden
