#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tentlim/kneading.hpp"
#include "tentlim/numeric.hpp"

// Extended-precision oracle for p-points whose distance to c is far below binary64 resolution.
namespace tentlim::deep {

using Real = boost::multiprecision::cpp_bin_float_100;

Real tent(const Real& s, const Real& x);

// Bisection on the first `symbols` itinerary symbols, iterated in extended precision.
Real solve_slope(const KneadingSequence& nu, int symbols = 250);

std::vector<Real> orbit(const Real& s, int n);

struct WindowPoint {
  Real t;
  Level level = 0;
};

// All t in the open interval (lo, hi) with T^k(t) = c for some k <= depth, level depth - k, sorted by t.
// Images of subintervals are tracked as affine maps so that no iterate is ever rounded twice.
std::vector<WindowPoint> window(const Real& s, const Real& lo, const Real& hi, int depth);

// |T^depth(t) - c_level|, the projection residual of a p-point
double projection_residual(const Real& s, const std::vector<Real>& orb, const WindowPoint& pt, int depth);

}  // namespace tentlim::deep
