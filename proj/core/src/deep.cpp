#include "tentlim/deep.hpp"

#include <algorithm>
#include <string>

namespace tentlim::deep {

Real tent(const Real& s, const Real& x) {
  static const Real half = Real(1) / 2;
  return x <= half ? s * x : s * (1 - x);
}

Real solve_slope(const KneadingSequence& nu, int symbols) {
  if (symbols < 1 || symbols > nu.size()) throw InvalidInput("symbol count outside the kneading sequence");
  const Real half = Real(1) / 2;
  auto compare = [&](const Real& s) {
    Real x = s / 2;
    int ones = 0;
    for (int j = 1; j <= symbols; ++j) {
      const int a = x > half ? 1 : 0;
      const int b = nu[j];
      if (a != b) {
        bool less = a < b;
        if (ones % 2) less = !less;
        return less ? -1 : 1;
      }
      ones += a;
      x = tent(s, x);
    }
    return 0;
  };
  Real lo = boost::multiprecision::sqrt(Real(2));
  Real hi = 2;
  if (compare(hi) == 0) return hi;
  for (int it = 0; it < 400; ++it) {
    const Real m = (lo + hi) / 2;
    const int c = compare(m);
    if (c == 0) return m;
    if (c < 0)
      lo = m;
    else
      hi = m;
  }
  throw InvalidInput("extended-precision bisection did not match " + std::to_string(symbols) + " symbols");
}

std::vector<Real> orbit(const Real& s, int n) {
  std::vector<Real> out{Real(1) / 2};
  out.reserve(n + 1);
  for (int j = 1; j <= n; ++j) out.push_back(tent(s, out.back()));
  return out;
}

std::vector<WindowPoint> window(const Real& s, const Real& lo, const Real& hi, int depth) {
  const Real half = Real(1) / 2;
  // endpoint images travel with the piece so that a split point maps to c exactly, not to c up to rounding
  struct Piece {
    Real a, b, alpha, beta, ia, ib;
    int k;
  };
  std::vector<WindowPoint> out;
  const std::size_t cap = max_entries();
  std::vector<Piece> stack{{lo, hi, Real(0), Real(1), lo, hi, 0}};
  while (!stack.empty()) {
    Piece pc = std::move(stack.back());
    stack.pop_back();
    if ((pc.ia - half) * (pc.ib - half) < 0) {
      const Real t = (half - pc.alpha) / pc.beta;
      out.push_back({t, depth - pc.k});
      if (out.size() > cap) throw RangeError("window holds more points than the entry cap");
      stack.push_back({pc.a, t, pc.alpha, pc.beta, pc.ia, half, pc.k});
      stack.push_back({t, pc.b, pc.alpha, pc.beta, half, pc.ib, pc.k});
      continue;
    }
    if (pc.k == depth) continue;
    const Real ja = tent(s, pc.ia);
    const Real jb = tent(s, pc.ib);
    if ((pc.ia + pc.ib) / 2 < half)
      stack.push_back({pc.a, pc.b, s * pc.alpha, s * pc.beta, ja, jb, pc.k + 1});
    else
      stack.push_back({pc.a, pc.b, s * (1 - pc.alpha), -s * pc.beta, ja, jb, pc.k + 1});
  }
  std::sort(out.begin(), out.end(), [](const WindowPoint& x, const WindowPoint& y) { return x.t < y.t; });
  return out;
}

double projection_residual(const Real& s, const std::vector<Real>& orb, const WindowPoint& pt, int depth) {
  if (pt.level < 0 || pt.level >= static_cast<Level>(orb.size()))
    throw RangeError("orbit too short for the point's level");
  Real x = pt.t;
  for (int j = 0; j < depth; ++j) x = tent(s, x);
  return static_cast<double>(boost::multiprecision::abs(x - orb[pt.level]));
}

}  // namespace tentlim::deep
