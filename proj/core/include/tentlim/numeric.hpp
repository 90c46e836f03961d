#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "tentlim/kneading.hpp"
#include "tentlim/limits.hpp"

namespace tentlim {

using Level = std::int64_t;
inline constexpr Level kInf = std::numeric_limits<Level>::max();

enum class Side { C0, R };

inline double tent(double s, double x) { return x <= 0.5 ? s * x : s * (1.0 - x); }

struct TentParams {
  double s = 2.0;
  double c = 0.5;
  double r = 2.0 / 3.0;
  // orbit[0] = c, orbit[n] = c_n
  std::vector<double> orbit;
  // itinerary[n] = side of c_n (index 0 unused)
  std::vector<std::uint8_t> itinerary;
  // bisection bracket that produced s
  double bracket_lo = 2.0;
  double bracket_hi = 2.0;
  bool shadowed = false;

  int depth() const { return static_cast<int>(orbit.size()) - 1; }
  double operator[](int n) const;

  // forward orbit of c; only trustworthy for a few dozen iterates
  static TentParams from_slope(double s, int n);
};

// itinerary of c_1 under T_s by direct iteration; out[j-1] is the side of c_j
std::vector<std::uint8_t> itinerary(double s, int n);

// Lookahead used when shadowing the orbit backwards along a kneading sequence.
int shadow_lookahead(double s);

// Orbit c_0..c_n reconstructed backwards along nu; needs nu.size() >= n + shadow_lookahead(s).
std::vector<double> shadow_orbit(double s, const KneadingSequence& nu, int n);

// Bisection on s in (sqrt 2, 2] using monotonicity of the kneading sequence in s.
TentParams solve_slope(const KneadingSequence& nu, int match_len, double tol = 1e-12);

std::vector<double> orbit(const TentParams& params, int n);

// Closest precritical pair (zeta_k, 1 - zeta_k) of order S_k.
std::pair<double, double> closest_precritical(const TentParams& params, const CuttingTimes& s, int k);

// Parent in a level tree: beta on indices, or the chain relation lambda(n) = beta(n+1) - 1.
using ParentMap = std::function<std::int64_t(std::int64_t)>;
ParentMap beta_parent(const CuttingTimes& s);
ParentMap lambda_parent(const CuttingTimes& s);
// n, parent(n), parent^2(n), ... down to the root (1 for beta, 0 for lambda)
std::vector<std::int64_t> parent_chain(std::int64_t n, const ParentMap& parent, std::int64_t root);

struct EtaTable {
  std::vector<double> eta;  // eta[n], eta[root-1..] unused
  std::int64_t root = 1;
  int depth = 0;
  double cap = 0.0;
};

struct EtaChoice {
  double eta = 0.0;
  double free_lo = 0.0;
  double free_hi = 0.0;
};

// side: -1 only points left of c_n matter, +1 only right, 0 both sides.
// Points m whose chain passes through n forbid [|c_m - c_n|, max distance along the chain],
// all other points bound eta from above; eta is the midpoint of the topmost free interval.
EtaChoice choose_eta(const std::vector<double>& orb, int depth, std::int64_t n, int side, double cap,
                     const ParentMap& parent, std::int64_t root);

// shrink * s^-p caps every eta_n.
EtaTable eta_table(const TentParams& params, int depth, double shrink, int p, const ParentMap& parent,
                   std::int64_t root = 1);

struct EtaViolation {
  std::int64_t n = 0;
  std::int64_t n_prime = 0;
  std::int64_t n_mid = 0;
};

std::vector<EtaViolation> verify_eta(const TentParams& params, const EtaTable& table,
                                     const ParentMap& parent);

struct OraclePoint {
  double t = 0.0;
  Level level = 0;
};

struct OraclePointList {
  Side side = Side::C0;
  int depth = 0;  // coordinate depth N
  int p = 0;
  std::size_t anchor = 0;
  std::vector<OraclePoint> points;  // arc order, sentinel included

  std::vector<Level> levels() const;
};

// Backward-orbit enumeration of all p-points on the depth-N arc of C0, parametrised by x_{-N} = t in [0, c].
OraclePointList oracle_p_points_C0(const TentParams& params, int depth, int p);
// Same for the arc of R through rho, t in [c, c_1], oriented so that rho has 0 on its left.
OraclePointList oracle_p_points_R(const TentParams& params, int depth, int p);

// x_{-p} of the point with x_{-depth} = t, by forward iteration
double project(const TentParams& params, double t, int steps);

}  // namespace tentlim
