#include "tentlim/chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tentlim {

std::vector<LinkId> ChainSpec::links_at(double x) const {
  std::vector<LinkId> out;
  const auto it = std::lower_bound(g.begin(), g.end(), x);
  const auto i = static_cast<LinkId>(it - g.begin());
  for (LinkId j : {i - 1, i}) {
    if (j >= 0 && j < static_cast<LinkId>(g.size()) && std::abs(g[j] - x) < delta) out.push_back(2 * j);
  }
  if (i > 0 && i < static_cast<LinkId>(g.size()) && g[i - 1] < x && x < g[i]) out.push_back(2 * (i - 1) + 1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// T^n has a local maximum at c_n iff an even number of 1-symbols precede it; the boundary then goes below c_n
int insertion_side(const TentParams& params, std::int64_t n) {
  int ones = 0;
  for (std::int64_t j = 1; j < n; ++j) ones += params.itinerary[j];
  return ones % 2 == 0 ? -1 : 1;
}

double clearance(const std::vector<double>& g, const std::vector<double>& orb, int depth) {
  double out = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= depth; ++n) {
    const auto it = std::lower_bound(g.begin(), g.end(), orb[n]);
    if (it != g.end()) out = std::min(out, std::abs(*it - orb[n]));
    if (it != g.begin()) out = std::min(out, std::abs(*(it - 1) - orb[n]));
  }
  return out;
}

double min_gap(const std::vector<double>& g) {
  double out = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < g.size(); ++i) out = std::min(out, g[i] - g[i - 1]);
  return out;
}

double nearest(const std::vector<double>& g, double x) {
  double out = std::numeric_limits<double>::infinity();
  const auto it = std::lower_bound(g.begin(), g.end(), x);
  if (it != g.end()) out = std::min(out, *it - x);
  if (it != g.begin()) out = std::min(out, x - *(it - 1));
  return out;
}

std::vector<std::vector<std::int64_t>> neighbour_lists(const CuttingTimes& s, int depth) {
  std::vector<std::vector<std::int64_t>> out(depth + 1);
  for (std::int64_t k = 1; k <= depth; ++k) {
    const std::int64_t l = s.beta(k + 1) - 1;
    out[k].push_back(l);
    out[l].push_back(k);
  }
  return out;
}

}  // namespace

BuiltChain build_chain(const TentParams& params, const CuttingTimes& s, int p, double epsilon, int depth) {
  if (p < 0) throw InvalidInput("p must be non-negative");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInput("epsilon must lie in (0, 1)");
  if (depth < 1) throw InvalidInput("chain depth must be positive");
  if (depth > params.depth()) throw RangeError("orbit shorter than the chain depth");
  const double top = params.s / 2.0;
  const auto& orb = params.orbit;
  // eta_n looks past depth so that the last boundaries are not placed blindly
  const int horizon = std::min(params.depth(), depth + 60);
  const auto parent = lambda_parent(s);

  BuiltChain out;
  ChainSpec& spec = out.spec;
  spec.p = p;
  spec.epsilon = epsilon;
  spec.s = params.s;
  const double cap = std::pow(params.s, -p) * epsilon / 2.0;
  const auto seed = static_cast<std::size_t>(std::ceil(2.0 * std::pow(params.s, p) / epsilon));
  const double mesh = top / static_cast<double>(seed);
  out.seed_points = seed + 1;
  auto& g = spec.g;
  g.resize(seed + 1);
  for (std::size_t i = 0; i <= seed; ++i) g[i] = top * static_cast<double>(i) / static_cast<double>(seed);
  g.back() = top;

  for (std::int64_t n = 0; n <= depth; ++n) {
    if (n >= 1) {
      const double a = std::min(orb[n], orb[parent(n)]);
      const double b = std::max(orb[n], orb[parent(n)]);
      if (std::upper_bound(g.begin(), g.end(), a) == std::lower_bound(g.begin(), g.end(), b)) {
        out.skipped.push_back(n);
        continue;
      }
    }
    const std::vector<int> sides = n == 0 ? std::vector<int>{-1, 1} : std::vector<int>{insertion_side(params, n)};
    for (int side : sides) {
      const auto choice = choose_eta(orb, horizon, n, side, cap, parent, 0);
      double eta = choice.eta;
      double x = orb[n] + side * eta;
      int tries = 0;
      while (nearest(g, x) < cap * 1e-6) {
        if (++tries > 10) throw RangeError("boundary for level " + std::to_string(n) + " collides with the chain");
        eta = choice.free_lo + (eta - choice.free_lo) / 2.0;
        x = orb[n] + side * eta;
      }
      if (!(x > 0.0 && x < top)) throw RangeError("boundary for level " + std::to_string(n) + " leaves [0, s/2]");
      g.insert(std::upper_bound(g.begin(), g.end(), x), x);
      out.insertions.push_back({n, side, eta});
    }
  }

  // the ends move in last, so clearance is measured on the interior boundaries only
  const std::vector<double> interior(g.begin() + 1, g.end() - 1);
  spec.delta = std::min({mesh / 1000.0, clearance(interior, orb, depth) / 4.0, min_gap(g) / 100.0});
  // c_1 sits at s/2 and the c_{S_k + 1} accumulate below it. They share c_1's link, so the end ball must hold
  // all of them at more than delta/2 from g_N while every other point stays out of the ball.
  std::vector<double> below_top;
  for (int n = 0; n <= depth; ++n) below_top.push_back(top - orb[n]);
  std::sort(below_top.begin(), below_top.end());
  double end_offset = 0.0;
  for (int halvings = 0;; ++halvings) {
    if (halvings > 200) throw RangeError("no clear position for the end boundary below s/2");
    const double d = spec.delta;
    const auto cluster_end = std::lower_bound(below_top.begin(), below_top.end(), d / 2.0);
    const double inner = cluster_end == below_top.begin() ? 0.0 : *(cluster_end - 1);
    end_offset = (d / 2.0 + inner + d) / 2.0;
    const bool fits = d / 2.0 + inner < end_offset &&
                      (cluster_end == below_top.end() || *cluster_end > end_offset + d);
    if (fits) break;
    spec.delta /= 2.0;
  }
  g.front() = 0.6 * spec.delta;
  g.back() = top - end_offset;
  return out;
}

LinkAssignment LinkAssignment::from_groups(const std::vector<std::vector<Level>>& groups, int depth) {
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  LinkAssignment out;
  out.ordered = false;
  out.link.assign(depth + 1, -1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (Level n : groups[i]) {
      if (n < 0 || n > depth) throw RangeError("group level " + std::to_string(n) + " beyond depth");
      if (out.link[n] != -1) throw InvalidInput("level " + std::to_string(n) + " listed in two groups");
      out.link[n] = static_cast<LinkId>(i);
    }
  }
  for (int n = 0; n <= depth; ++n)
    if (out.link[n] == -1) out.link[n] = static_cast<LinkId>(groups.size()) + n;
  return out;
}

LinkAssignment assign_links(const ChainSpec& spec, const TentParams& params, int depth) {
  if (depth > params.depth()) throw RangeError("orbit shorter than the requested depth");
  LinkAssignment out;
  out.link.resize(depth + 1);
  for (int n = 0; n <= depth; ++n) {
    const auto ls = spec.links_at(params.orbit[n]);
    if (ls.size() != 1)
      throw RangeError("c_" + std::to_string(n) + " lies in " + std::to_string(ls.size()) + " links");
    out.link[n] = ls.front();
  }
  return out;
}

LinkId link_of_level(const LinkAssignment& assign, Level n) {
  if (n < 0 || n > assign.depth()) throw RangeError("level " + std::to_string(n) + " beyond the link assignment");
  return assign.link[n];
}

bool ChainReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ChainReport verify_chain(const ChainSpec& spec, const TentParams& params, const CuttingTimes& s, int depth) {
  if (depth < 0 || depth > params.depth()) throw RangeError("orbit shorter than the requested depth");
  const auto& g = spec.g;
  const auto& orb = params.orbit;
  const double top = params.s / 2.0;
  const double width = std::pow(params.s, -spec.p) * spec.epsilon;
  ChainReport rep;
  auto add = [](ChainReport::Check& c, const std::string& msg) {
    c.pass = false;
    if (c.violations.size() < 50) c.violations.push_back(msg);
  };

  ChainReport::Check shape{"spec_shape", true, {}};
  if (g.size() < 2) add(shape, "fewer than two boundaries");
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!(g[i] > g[i - 1])) add(shape, "boundaries not increasing at " + std::to_string(i));
  if (!g.empty() && !(std::min(g.front(), top - g.back()) < spec.delta)) add(shape, "no end boundary within delta");
  if (!g.empty() && (g.front() < 0.0 || g.back() > top)) add(shape, "boundary outside [0, s/2]");
  if (!(spec.delta > 0.0) || spec.delta > min_gap(g) / 100.0) add(shape, "delta is not below 1/100 of the mesh");
  for (int n = 0; n <= depth; ++n)
    if (!(nearest(g, orb[n]) > spec.delta / 2.0)) add(shape, "c_" + std::to_string(n) + " within delta/2 of a boundary");

  ChainReport::Check diameter{"link_diameter", true, {}};
  for (std::size_t i = 1; i < g.size(); ++i)
    if (!(g[i] - g[i - 1] < width)) add(diameter, "link " + std::to_string(2 * i - 1) + " too wide");
  if (!(2.0 * spec.delta < width)) add(diameter, "delta-balls too wide");

  ChainReport::Check unique{"unique_link", true, {}};
  std::vector<LinkId> link(depth + 1, -1);
  for (int n = 0; n <= depth; ++n) {
    const auto ls = spec.links_at(orb[n]);
    if (ls.size() != 1) add(unique, "c_" + std::to_string(n) + " in " + std::to_string(ls.size()) + " links");
    if (!ls.empty()) link[n] = ls.front();
  }

  const auto nb = neighbour_lists(s, depth);
  // lowest level present in each link
  std::vector<std::pair<LinkId, int>> lowest;
  auto lowest_of = [&](LinkId l) {
    for (auto& [id, n] : lowest)
      if (id == l) return n;
    return -1;
  };
  for (int n = 0; n <= depth; ++n)
    if (lowest_of(link[n]) < 0) lowest.emplace_back(link[n], n);

  ChainReport::Check inside{"neighbours_in_link", true, {}};
  ChainReport::Check escape{"boundary_escape", true, {}};
  for (int n = 0; n <= depth; ++n) {
    if (lowest_of(link[n]) != n) {
      for (auto k : nb[n])
        if (link[k] != link[n])
          add(inside, "level " + std::to_string(n) + " has neighbour " + std::to_string(k) + " outside its link");
    } else {
      for (auto y : nb[n]) {
        if (link[y] == link[n]) continue;
        for (auto z : nb[y])
          if (z != n && link[z] == link[n])
            add(escape, "level " + std::to_string(n) + ": neighbour " + std::to_string(y) +
                            " leaves the link but its other neighbour " + std::to_string(z) + " returns");
      }
    }
  }
  rep.checks = {diameter, unique, inside, escape, shape};
  return rep;
}

std::vector<Turn> detect_turns(const FoldingPattern& fp, const LinkAssignment& assign) {
  std::vector<Turn> out;
  const auto& e = fp.entries;
  for (std::size_t i = 1; i + 1 < e.size(); ++i) {
    if (e[i] == kInf) continue;
    if (e[i] > e[i - 1] && e[i] > e[i + 1]) out.push_back({i, link_of_level(assign, e[i]), e[i]});
  }
  return out;
}

}  // namespace tentlim
