#include "tentlim/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace tentlim {

std::size_t max_entries() {
  if (const char* env = std::getenv("TENTLIM_MAX_ENTRIES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

double TentParams::operator[](int n) const {
  if (n < 0 || n > depth()) throw RangeError("orbit index " + std::to_string(n) + " beyond depth");
  return orbit[n];
}

TentParams TentParams::from_slope(double s, int n) {
  if (!(s > 1.0 && s <= 2.0)) throw InvalidInput("slope must lie in (1, 2]");
  if (n < 1) throw InvalidInput("orbit length must be positive");
  TentParams p;
  p.s = s;
  p.r = s / (s + 1.0);
  p.bracket_lo = p.bracket_hi = s;
  p.orbit.resize(n + 1);
  p.itinerary.assign(n + 1, 0);
  p.orbit[0] = p.c;
  for (int j = 1; j <= n; ++j) {
    p.orbit[j] = tent(s, p.orbit[j - 1]);
    p.itinerary[j] = p.orbit[j] > p.c ? 1 : 0;
  }
  return p;
}

// 0-based: out[j-1] is the side of c_j
std::vector<std::uint8_t> itinerary(double s, int n) {
  std::vector<std::uint8_t> out(std::max(n, 0));
  double x = s / 2.0;
  for (int j = 0; j < n; ++j) {
    out[j] = x > 0.5 ? 1 : 0;
    x = tent(s, x);
  }
  return out;
}

int shadow_lookahead(double s) { return static_cast<int>(std::ceil(40.0 / std::log(s))); }

std::vector<double> shadow_orbit(double s, const KneadingSequence& nu, int n) {
  const int m = shadow_lookahead(s);
  if (n < 1) throw InvalidInput("orbit length must be positive");
  if (nu.size() < n + m) throw RangeError("kneading sequence too short to shadow the orbit");
  // backward branches contract by 1/s, so the seed error is gone after m steps
  std::vector<double> orb(n + m + 1);
  orb[n + m] = 0.5;
  for (int j = n + m - 1; j >= 1; --j) {
    const double y = orb[j + 1];
    orb[j] = nu[j] ? 1.0 - y / s : y / s;
  }
  orb[0] = 0.5;
  orb[1] = s / 2.0;
  orb.resize(n + 1);
  return orb;
}

namespace {

// parity-lex comparison of an itinerary (0-based) with nu over h symbols: <0, 0, >0
int compare_itinerary(const std::vector<std::uint8_t>& a, const KneadingSequence& nu, int h) {
  int ones = 0;
  for (int j = 1; j <= h; ++j) {
    const int x = a[j - 1];
    const int y = nu[j];
    if (x != y) {
      bool less = x < y;
      if (ones % 2) less = !less;
      return less ? -1 : 1;
    }
    ones += x;
  }
  return 0;
}

int match_length(double s, const KneadingSequence& nu, int h) {
  const auto it = itinerary(s, h);
  int j = 0;
  while (j < h && it[j] == nu[j + 1]) ++j;
  return j;
}

// Bisect the boundary between cmp != 0 at `outside` and cmp == 0 at `inside`.
std::pair<double, double> cylinder_edge(double outside, double inside, const KneadingSequence& nu, int h) {
  for (;;) {
    const double m = outside + (inside - outside) / 2.0;
    if (m == outside || m == inside) break;
    if (compare_itinerary(itinerary(m, h), nu, h) == 0)
      inside = m;
    else
      outside = m;
  }
  return {outside, inside};
}

}  // namespace

TentParams solve_slope(const KneadingSequence& nu, int match_len, double tol) {
  if (match_len < 1) throw InvalidInput("match_len must be positive");
  if (match_len > nu.size()) throw InvalidInput("match_len exceeds the kneading sequence length");
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  // Forward binary64 iteration loses the itinerary after roughly 60 symbols near the Fibonacci slope.
  const int h = std::min(nu.size(), std::max(match_len, 60));

  const double root2 = std::sqrt(2.0);
  double lo = root2;
  double hi = 2.0;
  double s = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;

  if (compare_itinerary(itinerary(2.0, h), nu, h) == 0) {
    s = bracket_lo = bracket_hi = 2.0;
  } else {
    bool found = false;
    double hit = 0.0;
    while (hi - lo > 0.0) {
      const double m = lo + (hi - lo) / 2.0;
      if (m == lo || m == hi) break;
      const int c = compare_itinerary(itinerary(m, h), nu, h);
      if (c == 0) {
        found = true;
        hit = m;
        break;
      }
      if (c < 0)
        lo = m;
      else
        hi = m;
    }
    if (found) {
      const auto low = cylinder_edge(lo, hit, nu, h);
      const auto high = cylinder_edge(hi, hit, nu, h);
      bracket_lo = low.first;
      bracket_hi = high.first;
      s = low.second + (high.second - low.second) / 2.0;
      if (compare_itinerary(itinerary(s, h), nu, h) != 0) s = hit;
    } else {
      s = match_length(lo, nu, h) >= match_length(hi, nu, h) ? lo : hi;
      bracket_lo = lo;
      bracket_hi = hi;
    }
  }

  if (match_length(s, nu, match_len) < match_len)
    throw InvalidInput("no slope in (sqrt 2, 2] reproduces the kneading sequence for " +
                       std::to_string(match_len) + " symbols");
  if (s <= root2 + 1e-9) throw InvalidInput("kneading sequence is only matched at s = sqrt 2 (renormalizable)");
  (void)tol;  // the bracket is as narrow as binary64 allows; callers compare its width to their tolerance

  TentParams p;
  const int n_shadow = nu.size() - shadow_lookahead(s);
  if (s < 2.0 && n_shadow >= h) {
    p.s = s;
    p.r = s / (s + 1.0);
    p.orbit = shadow_orbit(s, nu, n_shadow);
    p.itinerary.assign(n_shadow + 1, 0);
    for (int j = 1; j <= n_shadow; ++j) p.itinerary[j] = static_cast<std::uint8_t>(nu[j]);
    p.shadowed = true;
  } else {
    p = TentParams::from_slope(s, nu.size());
  }
  p.bracket_lo = bracket_lo;
  p.bracket_hi = bracket_hi;
  return p;
}

std::vector<double> orbit(const TentParams& params, int n) {
  if (n < 0 || n > params.depth()) throw RangeError("orbit requested beyond the stored depth");
  return {params.orbit.begin() + 1, params.orbit.begin() + n + 1};
}

std::pair<double, double> closest_precritical(const TentParams& params, const CuttingTimes& s, int k) {
  const std::int64_t sk = s.small(k);
  if (sk - 1 > params.depth()) throw RangeError("orbit too short for the requested cutting time");
  // T^j on (zeta_k, c) stays on the side of c_j, so pull c back along the itinerary
  double y = params.c;
  const double top = params.s / 2.0;
  for (std::int64_t j = sk - 1; j >= 1; --j) {
    y = params.itinerary[j] ? 1.0 - y / params.s : y / params.s;
    if (y < 0.0 || y > top) throw RangeError("backward branch left [0, s/2]");
  }
  const double zeta = y / params.s;
  return {zeta, 1.0 - zeta};
}

ParentMap beta_parent(const CuttingTimes& s) {
  return [s](std::int64_t n) -> std::int64_t { return n <= 1 ? 0 : s.beta(n); };
}

ParentMap lambda_parent(const CuttingTimes& s) {
  return [s](std::int64_t n) -> std::int64_t { return n <= 0 ? -1 : s.beta(n + 1) - 1; };
}

std::vector<std::int64_t> parent_chain(std::int64_t n, const ParentMap& parent, std::int64_t root) {
  std::vector<std::int64_t> out{n};
  while (out.back() > root) out.push_back(parent(out.back()));
  return out;
}

EtaChoice choose_eta(const std::vector<double>& orb, int depth, std::int64_t n, int side, double cap,
                     const ParentMap& parent, std::int64_t root) {
  if (depth >= static_cast<int>(orb.size())) throw RangeError("orbit shorter than depth");
  const double cn = orb[n];
  double bound = cap;
  std::vector<std::pair<double, double>> forbidden;
  for (std::int64_t m = root; m <= depth; ++m) {
    if (m == n) continue;
    const double d = orb[m] - cn;
    if (side != 0 && !(side * d > 0)) continue;
    const auto chain = parent_chain(m, parent, root);
    const auto it = std::find(chain.begin(), chain.end(), n);
    if (it == chain.end()) {
      bound = std::min(bound, std::abs(d));
      continue;
    }
    double far = 0.0;
    for (auto j = chain.begin(); j != it; ++j) far = std::max(far, std::abs(orb[*j] - cn));
    forbidden.emplace_back(std::abs(d), far);
  }
  std::sort(forbidden.begin(), forbidden.end());
  // free intervals of (0, bound) outside the forbidden ones; keep the topmost
  double a = 0.0;
  EtaChoice best{bound / 2.0, 0.0, bound};
  bool have = false;
  for (const auto& [lo, hi] : forbidden) {
    if (lo >= bound) break;
    if (lo > a) {
      best = {(a + lo) / 2.0, a, lo};
      have = true;
    }
    a = std::max(a, hi);
  }
  if (bound > a) {
    best = {(a + bound) / 2.0, a, bound};
    have = true;
  }
  if (!have) throw RangeError("no admissible eta for n = " + std::to_string(n));
  return best;
}

EtaTable eta_table(const TentParams& params, int depth, double shrink, int p, const ParentMap& parent,
                   std::int64_t root) {
  if (depth > params.depth()) throw RangeError("orbit too short for the eta table");
  if (!(shrink > 0.0)) throw InvalidInput("shrink must be positive");
  EtaTable t;
  t.root = root;
  t.depth = depth;
  t.cap = shrink * std::pow(params.s, -p);
  t.eta.assign(depth + 1, 0.0);
  for (std::int64_t n = root; n <= depth; ++n)
    t.eta[n] = choose_eta(params.orbit, depth, n, 0, t.cap, parent, root).eta;
  return t;
}

std::vector<EtaViolation> verify_eta(const TentParams& params, const EtaTable& table, const ParentMap& parent) {
  std::vector<EtaViolation> out;
  const auto& orb = params.orbit;
  for (std::int64_t m = table.root; m <= table.depth; ++m) {
    const auto chain = parent_chain(m, parent, table.root);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const std::int64_t n = chain[i];
      const double eta = table.eta[n];
      if (std::abs(orb[m] - orb[n]) > eta) continue;
      for (std::size_t j = 1; j < i; ++j) {
        if (!(std::abs(orb[chain[j]] - orb[n]) < eta)) out.push_back({n, m, chain[j]});
      }
    }
  }
  return out;
}

std::vector<Level> OraclePointList::levels() const {
  std::vector<Level> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(pt.level);
  return out;
}

namespace {

struct Node {
  double y;
  int order;
};

// All preimages y of c with T^order(y) = c, order <= max_order, inside [0, c_1]; visit(y, order).
template <class Visit>
void enumerate_preimages(const TentParams& params, int max_order, Visit&& visit) {
  const double s = params.s;
  const double c2 = tent(s, s / 2.0);
  const std::size_t cap = max_entries();
  std::size_t count = 0;
  std::vector<Node> stack{{params.c, 0}};
  while (!stack.empty()) {
    const Node nd = stack.back();
    stack.pop_back();
    visit(nd.y, nd.order);
    if (++count > 4 * cap) throw RangeError("oracle enumeration exceeds the entry cap");
    if (nd.order == max_order) continue;
    stack.push_back({nd.y / s, nd.order + 1});
    if (nd.y >= c2) stack.push_back({1.0 - nd.y / s, nd.order + 1});
  }
}

void check_depth(int depth, int p) {
  if (p < 0) throw InvalidInput("p must be non-negative");
  if (p >= depth) throw InvalidInput("oracle needs p < N");
}

}  // namespace

OraclePointList oracle_p_points_C0(const TentParams& params, int depth, int p) {
  check_depth(depth, p);
  const int d = depth - p;
  OraclePointList out;
  out.side = Side::C0;
  out.depth = depth;
  out.p = p;
  enumerate_preimages(params, d, [&](double y, int order) {
    if (y > 0.0 && y <= params.c) out.points.push_back({y, d - order});
  });
  std::sort(out.points.begin(), out.points.end(),
            [](const OraclePoint& a, const OraclePoint& b) { return a.t < b.t; });
  out.points.insert(out.points.begin(), OraclePoint{0.0, kInf});
  out.anchor = 0;
  if (out.points.size() > max_entries()) throw RangeError("oracle list exceeds the entry cap");
  return out;
}

OraclePointList oracle_p_points_R(const TentParams& params, int depth, int p) {
  check_depth(depth, p);
  const int d = depth - p;
  const double c1 = params.s / 2.0;
  OraclePointList out;
  out.side = Side::R;
  out.depth = depth;
  out.p = p;
  enumerate_preimages(params, d, [&](double y, int order) {
    if (y >= params.c && y < c1) out.points.push_back({y, d - order});
  });
  // x_{-N-1} = 1 - t/s hits c exactly at t = c_1
  out.points.push_back({c1, d + 1});
  out.points.push_back({params.r, kInf});
  std::sort(out.points.begin(), out.points.end(),
            [](const OraclePoint& a, const OraclePoint& b) { return a.t < b.t; });
  if (d % 2 == 1) std::reverse(out.points.begin(), out.points.end());
  for (std::size_t i = 0; i < out.points.size(); ++i)
    if (out.points[i].level == kInf) out.anchor = i;
  if (out.points.size() > max_entries()) throw RangeError("oracle list exceeds the entry cap");
  return out;
}

double project(const TentParams& params, double t, int steps) {
  for (int j = 0; j < steps; ++j) t = tent(params.s, t);
  return t;
}

}  // namespace tentlim
