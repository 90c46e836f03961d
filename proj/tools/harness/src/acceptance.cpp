#include "tentlim/harness/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "tentlim/chains.hpp"
#include "tentlim/deep.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/harness/compare.hpp"
#include "tentlim/harness/golden.hpp"
#include "tentlim/symmetry.hpp"

namespace tentlim::harness {

namespace {

KneadingMap fibonacci() { return KneadingMap::offset(2, 60); }

// Slope and shadowed orbit for a kneading map, long enough for chains at depth 150 plus lookahead.
struct Dynamics {
  KneadingSequence nu;
  TentParams params;
};

Dynamics dynamics_for(const KneadingMap& q, int symbols) {
  Dynamics d;
  d.nu = kneading_sequence(q, symbols);
  d.params = solve_slope(d.nu, 60);
  return d;
}

const Dynamics& fibonacci_dynamics() {
  static const Dynamics d = dynamics_for(fibonacci(), 2400);
  return d;
}

std::string join(const std::vector<Level>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << (v[i] == kInf ? "INF" : std::to_string(v[i]));
  return os.str();
}

template <class T>
std::string join_idx(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// ---- individual criteria ----

void cutting_time_check(const RunConfig&, CheckResult& r) {
  const auto s = cutting_times(KneadingMap::offset(2, 10), 7);
  // independent recurrence F_0 = 1, F_1 = 2, F_k = F_{k-1} + F_{k-2}
  std::vector<long long> fib{1, 2};
  while (fib.size() < 8) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  std::vector<long long> got;
  for (int k = 0; k <= 7; ++k) got.push_back(s.small(k));
  r.pass = got == fib && got == golden::kFibonacciCuttingTimes;
  r.detail = "S_0..S_7 = " + join_idx(got);
}

void c0_prefix_check(const RunConfig&, CheckResult& r) {
  const auto q = fibonacci();
  const auto sym = fp_c0(q, 10);
  const auto& dyn = fibonacci_dynamics();
  const auto orc = oracle_p_points_C0(dyn.params, 12, 2).levels();
  const auto& want = golden::kC0Prefix;
  const bool sym_ok = sym.entries.size() >= want.size() && std::equal(want.begin(), want.end(), sym.entries.begin());
  const bool orc_ok = orc.size() >= want.size() && std::equal(want.begin(), want.end(), orc.begin());
  r.pass = sym_ok && orc_ok;
  r.detail = "symbolic " + join({sym.entries.begin(), sym.entries.begin() + 7}) + "; oracle " +
             join({orc.begin(), orc.begin() + std::min<std::size_t>(7, orc.size())});
}

void salient_check(const RunConfig&, CheckResult& r) {
  const auto q = fibonacci();
  const auto c0 = fp_c0(q, 20);
  const auto s0 = salient_indices(c0);
  std::vector<std::string> bad;
  if (s0.right.size() < 20) bad.push_back("FP(C0) has only " + std::to_string(s0.right.size()) + " salient points");
  for (std::size_t i = 0; i < std::min<std::size_t>(20, s0.right.size()); ++i)
    if (c0.entries[s0.right[i]] != static_cast<Level>(i + 1))
      bad.push_back("L(s_" + std::to_string(i + 1) + ") = " + std::to_string(c0.entries[s0.right[i]]));
  const auto rr = fp_r(q, 12);
  const auto sr = salient_indices(rr);
  if (sr.right.size() < 12 || sr.left.size() < 12) bad.push_back("FP(R) has fewer than 12 salient pairs");
  for (std::size_t i = 0; i < std::min<std::size_t>(12, sr.right.size()); ++i)
    if (rr.entries[sr.right[i]] != static_cast<Level>(2 * i + 1))
      bad.push_back("L(t^" + std::to_string(i + 1) + ") = " + std::to_string(rr.entries[sr.right[i]]));
  for (std::size_t i = 0; i < std::min<std::size_t>(12, sr.left.size()); ++i)
    if (rr.entries[sr.left[i]] != static_cast<Level>(2 * i + 2))
      bad.push_back("L(t^-" + std::to_string(i + 1) + ") = " + std::to_string(rr.entries[sr.left[i]]));
  r.pass = bad.empty();
  r.detail = bad.empty() ? "FP(C0) depth 20 (" + std::to_string(c0.size()) + " entries), FP(R) depth 23 (" +
                               std::to_string(rr.size()) + " entries)"
                         : bad.front();
}

void golden_window_check(const RunConfig&, CheckResult& r) {
  const auto& want = golden::kGoldenWindow;
  const auto s = cutting_times_for_depth(fibonacci(), 20);
  FoldingPattern fp = seed_c0();
  for (int d = 1; d <= 20; ++d) {
    fp = sigma_step(fp, s);
    const auto it = std::search(fp.entries.begin(), fp.entries.end(), want.begin(), want.end());
    if (it != fp.entries.end()) {
      const auto at = it - fp.entries.begin();
      r.pass = true;
      r.detail = "window of " + std::to_string(want.size()) + " entries first at depth " + std::to_string(d) +
                 ", index " + std::to_string(at) + ", preceded by " +
                 join({fp.entries.begin() + std::max<std::ptrdiff_t>(0, at - 3), it});
      return;
    }
  }
  r.pass = false;
  r.detail = "window not found up to depth 20";
}

struct Expect {
  std::string name;
  bool ok;
};

void classification_check(const RunConfig&, CheckResult& r) {
  const auto links = LinkAssignment::from_groups(golden::kLinkGroups, golden::kLinkGroupDepth);
  auto pattern = [](const std::vector<Level>& e) { return FoldingPattern{Side::C0, e, 0, false, false}; };
  const auto arc = pattern(golden::kQuasiArc);
  const auto ex1 = pattern(golden::kDecreasingBasic);
  const auto ex2 = pattern(golden::kDecreasingNonBasic);
  const auto ex3 = pattern(golden::kNotDecreasing);
  const ArcWindow w26(arc, links, 2, 6);
  const ArcWindow w230(arc, links, 2, 30);
  const ArcWindow a1(ex1, links, 0, ex1.size() - 1);
  const ArcWindow a2(ex2, links, 0, ex2.size() - 1);
  const ArcWindow a3(ex3, links, 0, ex3.size() - 1);
  const auto c1 = decompose_quasi_chain(a1);
  const auto c2 = decompose_quasi_chain(a2);
  const auto c3 = decompose_quasi_chain(a3);
  const auto c3head = decompose_quasi_chain(a3.sub(0, 12));
  auto decreasing_with = [](const std::optional<QuasiChain>& c, std::vector<std::size_t> nodes) {
    return c && c->direction == Direction::decreasing && c->nodes == nodes;
  };
  const std::vector<Expect> expect{
      {"[x2,x6] basic quasi", is_quasi_p_symmetric(w26) && is_basic_quasi(w26)},
      {"[x2,x30] quasi, not basic", is_quasi_p_symmetric(w230) && !is_basic_quasi(w230)},
      {"(1) basic decreasing", decreasing_with(c1, {2, 6, 9, 11, 12}) && c1->basic},
      {"(2) non-basic decreasing", decreasing_with(c2, {3, 23, 41, 57, 72}) && !c2->basic},
      {"(3) not decreasing", !(c3 && c3->direction == Direction::decreasing)},
      {"(3) head decreasing", decreasing_with(c3head, {2, 6, 9, 11, 12})},
      {"(3) [y9,y40] quasi", is_quasi_p_symmetric(a3.sub(9, 40)) && quasi_structure(a3.sub(9, 40))->midpoint == 25},
      {"(3) [y6,y25] not quasi", !is_quasi_p_symmetric(a3.sub(6, 25))},
  };
  r.pass = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (!expect[i].ok) r.pass = false;
    os << (i ? "; " : "") << (expect[i].ok ? "" : "FAILED ") << expect[i].name;
  }
  r.detail = os.str();
}

void chain_check(const RunConfig& cfg, CheckResult& r) {
  const auto& dyn = fibonacci_dynamics();
  const int depth = 150;
  const auto s = cutting_times_for_depth(fibonacci(), depth + 80);
  const auto built = build_chain(dyn.params, s, cfg.p, cfg.epsilon, depth);
  const auto rep = verify_chain(built.spec, dyn.params, s, depth);
  std::ostringstream os;
  os << built.spec.g.size() << " boundaries, " << built.insertions.size() << " insertions, delta "
     << built.spec.delta << ";";
  for (const auto& c : rep.checks) {
    os << " " << c.name << "=" << (c.pass ? "ok" : "FAIL");
    if (!c.pass && !c.violations.empty()) os << " (" << c.violations.front() << ")";
  }
  r.pass = rep.pass();
  r.detail = os.str();
}

// ---- oracle equivalence ----

struct OracleTally {
  std::size_t compared = 0;
  double max_residual = 0.0;
  std::vector<std::string> bad;
};

void compare_levels(const std::vector<Level>& sym, const std::vector<Level>& orc, const std::string& what,
                    OracleTally& t) {
  t.compared += std::min(sym.size(), orc.size());
  if (sym == orc) return;
  std::size_t i = 0;
  while (i < sym.size() && i < orc.size() && sym[i] == orc[i]) ++i;
  t.bad.push_back(what + ": first mismatch at entry " + std::to_string(i) + " of " + std::to_string(sym.size()) +
                  "/" + std::to_string(orc.size()));
}

// Whole patterns against the binary64 oracle while they stay small.
void full_oracle(const Dynamics& dyn, const CuttingTimes& s, int max_depth, double tol, OracleTally& t) {
  const int p = 2;
  FoldingPattern c0 = seed_c0();
  FoldingPattern rr = seed_r();
  for (int d = 1; d <= max_depth; ++d) {
    c0 = sigma_step(c0, s);
    rr = sigma_step(rr, s);
    const auto oc = oracle_p_points_C0(dyn.params, d + p, p);
    const auto orr = oracle_p_points_R(dyn.params, d + p, p);
    compare_levels(c0.entries, oc.levels(), "C0 depth " + std::to_string(d), t);
    compare_levels(rr.entries, orr.levels(), "R depth " + std::to_string(d), t);
    for (const auto* list : {&oc, &orr})
      for (const auto& pt : list->points) {
        if (pt.level == kInf) continue;
        const double res = std::abs(project(dyn.params, pt.t, d) - dyn.params.orbit[pt.level]);
        t.max_residual = std::max(t.max_residual, res);
        if (res > tol && t.bad.size() < 5)
          t.bad.push_back("binary64 projection residual " + std::to_string(res) + " at depth " + std::to_string(d));
      }
  }
}

using deep::Real;

// Smallest window [lo, hi) around the requested end holding at least `want` points.
std::vector<deep::WindowPoint> grow_window(const Real& s, const Real& at, int dir, int depth, std::size_t want) {
  Real w = Real(1e-16);
  for (int i = 0; i < 200; ++i, w *= 2) {
    const Real lo = dir < 0 ? at - w : at;
    const Real hi = dir < 0 ? at : at + w;
    auto pts = deep::window(s, lo, hi, depth);
    if (pts.size() >= want) return pts;
  }
  throw RangeError("window did not fill");
}

std::vector<Level> levels_of(const std::vector<deep::WindowPoint>& pts) {
  std::vector<Level> out;
  for (const auto& p : pts) out.push_back(p.level);
  return out;
}

void deep_windows(const Real& sd, const CuttingTimes& s, int d, double tol, OracleTally& t) {
  const std::size_t width = 120;
  const auto orb = deep::orbit(sd, d + 2);
  const Real c = Real(1) / 2;
  const Real c1 = sd / 2;
  const Real rho = sd / (sd + 1);
  auto residuals = [&](const std::vector<deep::WindowPoint>& pts) {
    for (const auto& p : pts) {
      const double res = deep::projection_residual(sd, orb, p, d);
      t.max_residual = std::max(t.max_residual, res);
      if (res > tol && t.bad.size() < 5) t.bad.push_back("deep projection residual " + std::to_string(res));
    }
  };
  const std::string tag = " depth " + std::to_string(d);

  // C0, end at c: the last entry is c itself at level d
  {
    FoldingPattern fp = seed_c0();
    fp.clipped_left = true;
    const auto sym = iterate(fp, s, d, width);
    auto pts = grow_window(sd, c, -1, d, width - 1);
    pts.erase(pts.begin(), pts.end() - static_cast<std::ptrdiff_t>(width - 1));
    pts.push_back({c, d});
    residuals(pts);
    compare_levels(sym.entries, levels_of(pts), "C0 end at c" + tag, t);
  }
  // C0, start at 0
  {
    FoldingPattern fp = seed_c0();
    fp.clipped_right = true;
    const auto sym = iterate(fp, s, d, width);
    auto pts = grow_window(sd, Real(0), 1, d, width - 1);
    pts.resize(width - 1);
    residuals(pts);
    auto lv = levels_of(pts);
    lv.insert(lv.begin(), kInf);
    compare_levels(sym.entries, lv, "C0 start" + tag, t);
  }
  const bool flip = d % 2 == 1;
  // arc order of R: t increasing for even depth, decreasing for odd
  auto arc_order = [&](std::vector<deep::WindowPoint> pts) {
    if (flip) std::reverse(pts.begin(), pts.end());
    return pts;
  };
  // R around rho
  {
    FoldingPattern fp = seed_r();
    fp.clipped_left = fp.clipped_right = true;
    const auto sym = iterate(fp, s, d, width);
    auto below = grow_window(sd, rho, -1, d, width);
    auto above = grow_window(sd, rho, 1, d, width);
    below.erase(below.begin(), below.end() - static_cast<std::ptrdiff_t>(width));
    above.resize(width);
    residuals(below);
    residuals(above);
    std::vector<deep::WindowPoint> all = below;
    all.push_back({rho, kInf});
    all.insert(all.end(), above.begin(), above.end());
    compare_levels(sym.entries, levels_of(arc_order(all)), "R around rho" + tag, t);
  }
  // R end at c (level d) and end at c_1 (level d + 1)
  for (bool at_c : {true, false}) {
    FoldingPattern fp = seed_r();
    // the seed reads c .. rho .. c_1 left to right
    (at_c ? fp.clipped_right : fp.clipped_left) = true;
    const auto sym = iterate(fp, s, d, width);
    std::vector<deep::WindowPoint> pts;
    if (at_c) {
      pts = grow_window(sd, c, 1, d, width - 1);
      pts.resize(width - 1);
      pts.insert(pts.begin(), {c, d});
    } else {
      pts = grow_window(sd, c1, -1, d, width - 1);
      pts.erase(pts.begin(), pts.end() - static_cast<std::ptrdiff_t>(width - 1));
      pts.push_back({c1, d + 1});
    }
    residuals(pts);
    compare_levels(sym.entries, levels_of(arc_order(pts)), std::string("R end at ") + (at_c ? "c" : "c_1") + tag, t);
  }
}

void oracle_check(const RunConfig& cfg, CheckResult& r) {
  const auto& dyn = fibonacci_dynamics();
  const int top = cfg.oracle_depth;
  const auto s = cutting_times_for_depth(fibonacci(), top + 2);
  OracleTally t;
  const int full = std::min(top, 16);
  full_oracle(dyn, s, full, cfg.tolerance, t);
  std::vector<int> deep_depths;
  for (int d : {full + 1, 30, 45, top - 1, top})
    if (d > full && d <= top && (deep_depths.empty() || deep_depths.back() < d)) deep_depths.push_back(d);
  const Real sd = deep::solve_slope(dyn.nu, 250);
  for (int d : deep_depths) deep_windows(sd, s, d, cfg.tolerance, t);
  r.pass = t.bad.empty();
  std::ostringstream os;
  os << "full patterns to depth " << full << ", windows at depths " << join_idx(deep_depths) << "; " << t.compared
     << " entries compared, max projection residual " << t.max_residual;
  if (!t.bad.empty()) os << "; " << t.bad.front();
  r.detail = os.str();
}

void distance_check(const RunConfig&, CheckResult& r) {
  const auto q = fibonacci();
  const auto& dyn = fibonacci_dynamics();
  const auto s = cutting_times(q, 16);
  const double c = dyn.params.c;
  auto dist = [&](int k) { return std::abs(dyn.params.orbit[s.small(k)] - c); };
  int checked = 0;
  std::vector<std::string> bad;
  std::ostringstream ratios;
  for (int k = 3; k <= 15; ++k) {
    if (s.small(k) > dyn.params.depth()) continue;
    const int qk = q(k);
    const int qqk = q(qk);
    const double a = dist(k);
    // below ~1e-13 the shadowed orbit cannot separate c_{S_k} from c
    if (!(a > 1e-13)) continue;
    ++checked;
    const double b = dist(qk);
    const double e = dist(qqk);
    if (!(a < b)) bad.push_back("k=" + std::to_string(k) + ": |c_{S_k}-c| >= |c_{S_Q(k)}-c|");
    if (!(a < 0.5 * e)) bad.push_back("k=" + std::to_string(k) + ": |c_{S_k}-c| >= half |c_{S_QQ(k)}-c|");
    // symbolic confirmation of the first inequality
    if (compare_distance_to_critical(static_cast<int>(s.small(k)), static_cast<int>(s.small(qk)), dyn.nu) ==
        PointOrder::greater)
      bad.push_back("k=" + std::to_string(k) + ": symbolic order disagrees");
    ratios << (checked > 1 ? " " : "") << a / e;
  }
  r.pass = bad.empty() && checked > 0;
  r.detail = std::to_string(checked) + " of 13 values of k checkable; |c_{S_k}-c| / |c_{S_QQ(k)}-c| = " +
             ratios.str() + (bad.empty() ? "" : "; " + bad.front());
}

struct BridgeTally {
  int found = 0, absent = 0, inconclusive = 0;
  std::vector<std::string> bad;
};

BridgeTally bridge_scan(const FoldingPattern& fp, const KappaData& kd, Level top) {
  BridgeTally t;
  for (Level b = 1; b <= top; ++b)
    for (Level a = 0; a < b; ++a) {
      const auto res = bridges_exists(fp, a, b);
      if (res.outcome == BridgeOutcome::inconclusive) {
        ++t.inconclusive;
        continue;
      }
      const bool found = res.outcome == BridgeOutcome::found;
      (found ? t.found : t.absent)++;
      if (found != kd.in_lambda(b - a))
        t.bad.push_back("(a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + "): search says " +
                        (found ? "found" : "absent"));
    }
  return t;
}

void bridges_check(const RunConfig& cfg, CheckResult& r) {
  const auto& dyn = fibonacci_dynamics();
  const auto kd = kappa_data(dyn.nu);
  const auto fp = fp_c0(fibonacci(), std::max(cfg.fold_depth, 20));
  const auto t = bridge_scan(fp, kd, 12);
  r.pass = t.bad.empty() && t.found + t.absent > 0;
  r.detail = "kappa = " + std::to_string(kd.kappa) + "; " + std::to_string(t.found) + " found, " +
             std::to_string(t.absent) + " absent, " + std::to_string(t.inconclusive) + " inconclusive" +
             (t.bad.empty() ? "" : "; " + t.bad.front());
}

void totality_check(const RunConfig& cfg, CheckResult& r) {
  const auto links = LinkAssignment::from_groups(golden::kLinkGroups, golden::kLinkGroupDepth);
  const auto fp = fp_c0(fibonacci(), std::min(cfg.fold_depth, golden::kLinkGroupDepth - 1));
  std::map<SymmetryClass, std::size_t> counts;
  std::size_t windows = 0;
  std::string first_bad;
  const std::size_t n = fp.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n && j - i + 1 <= 40; ++j) {
      const ArcWindow w(fp, links, i, j);
      if (!is_link_symmetric(w)) continue;
      ++windows;
      const auto cl = classify_link_symmetric(w);
      ++counts[cl.cls];
      if (cl.cls == SymmetryClass::NONE && first_bad.empty())
        first_bad = "[" + std::to_string(i) + ", " + std::to_string(j) + "] unclassified: " +
                    join({fp.entries.begin() + static_cast<std::ptrdiff_t>(i),
                          fp.entries.begin() + static_cast<std::ptrdiff_t>(j) + 1});
    }
  r.pass = counts[SymmetryClass::NONE] == 0 && windows > 0;
  std::ostringstream os;
  os << windows << " link-symmetric windows in " << n << " entries:";
  for (const auto& [cls, k] : counts) os << " " << to_string(cls) << "=" << k;
  if (!first_bad.empty()) os << "; " << first_bad;
  r.detail = os.str();
}

void divergence_check(const RunConfig& cfg, CheckResult& r) {
  const auto a = fibonacci();
  const auto b = KneadingMap::offset(3, 60);
  const int n = std::min(cfg.salient, 8);
  const auto first = compare_fp_r(a, b, n);
  const auto again = compare_fp_r(a, b, n);
  const auto swapped = compare_fp_r(b, a, n);
  const bool finite = first.divergence.has_value();
  const bool stable = finite && again.divergence && swapped.divergence &&
                      again.divergence->offset == first.divergence->offset &&
                      swapped.divergence->offset == first.divergence->offset &&
                      swapped.divergence->side == first.divergence->side;
  r.pass = finite && stable;
  r.detail = first.summary() + (stable ? "; repeat and swapped runs agree" : "; runs disagree");
}

// ---- property checks for the configured map ----

void admissible_prop(const RunConfig& cfg, CheckResult& r) {
  const int k = std::min(cfg.kneading.k_max(), 40);
  const auto adm = is_admissible(cfg.kneading, k);
  r.pass = adm.admissible;
  r.detail = adm.admissible ? "admissible for k <= " + std::to_string(k)
                            : "violated at k = " + std::to_string(adm.first_violation.value_or(-1));
}

void fibonacci_like_prop(const RunConfig& cfg, CheckResult& r) {
  const int k = std::min(cfg.kneading.k_max(), 40);
  r.pass = is_fibonacci_like(cfg.kneading, k);
  r.detail = std::string(r.pass ? "" : "not ") + "Fibonacci-like on 3 <= k < " + std::to_string(k);
}

void salient_prop(const RunConfig& cfg, CheckResult& r) {
  const int n = cfg.salient;
  const auto c0 = fp_c0(cfg.kneading, n);
  const auto rr = fp_r(cfg.kneading, n);
  const auto s0 = salient_indices(c0);
  const auto sr = salient_indices(rr);
  bool ok = s0.right.size() >= static_cast<std::size_t>(n) && sr.right.size() >= static_cast<std::size_t>(n) &&
            sr.left.size() >= static_cast<std::size_t>(n);
  for (int i = 0; ok && i < n; ++i)
    ok = c0.entries[s0.right[i]] == i + 1 && rr.entries[sr.right[i]] == 2 * i + 1 &&
         rr.entries[sr.left[i]] == 2 * i + 2;
  r.pass = ok;
  r.detail = "salient levels over " + std::to_string(n) + " points per side";
}

void oracle_prop(const RunConfig& cfg, CheckResult& r) {
  const auto dyn = dynamics_for(cfg.kneading, 400);
  const int depth = std::min(cfg.fold_depth, 14);
  const auto s = cutting_times_for_depth(cfg.kneading, depth + 2);
  OracleTally t;
  full_oracle(dyn, s, depth, cfg.tolerance, t);
  r.pass = t.bad.empty();
  r.detail = std::to_string(t.compared) + " entries to depth " + std::to_string(depth) +
             (t.bad.empty() ? "" : "; " + t.bad.front());
}

void bridges_prop(const RunConfig& cfg, CheckResult& r) {
  const auto dyn = dynamics_for(cfg.kneading, 400);
  const auto kd = kappa_data(dyn.nu);
  const auto fp = fp_c0(cfg.kneading, cfg.fold_depth);
  const auto t = bridge_scan(fp, kd, std::min<Level>(12, cfg.fold_depth));
  r.pass = t.bad.empty();
  r.detail = "kappa = " + std::to_string(kd.kappa) + "; " + std::to_string(t.found + t.absent) + " conclusive pairs" +
             (t.bad.empty() ? "" : "; " + t.bad.front());
}

void chain_prop(const RunConfig& cfg, CheckResult& r) {
  const auto dyn = dynamics_for(cfg.kneading, cfg.chain_depth + 400);
  const auto s = cutting_times_for_depth(cfg.kneading, cfg.chain_depth + 80);
  const auto built = build_chain(dyn.params, s, cfg.p, cfg.epsilon, cfg.chain_depth);
  const auto rep = verify_chain(built.spec, dyn.params, s, cfg.chain_depth);
  r.pass = rep.pass();
  std::ostringstream os;
  os << built.spec.g.size() << " boundaries at slope " << dyn.params.s;
  for (const auto& c : rep.checks)
    if (!c.pass) os << "; " << c.name << ": " << (c.violations.empty() ? "" : c.violations.front());
  r.detail = os.str();
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks{
      {"acceptance.01", "Fibonacci cutting times", 0.001, cutting_time_check},
      {"acceptance.02", "FP(C0) prefix, symbolic and numeric", 1.0, c0_prefix_check},
      {"acceptance.03", "salient levels of FP(C0) and FP(R)", 10.0, salient_check},
      {"acceptance.04", "golden window in the generated pattern", 30.0, golden_window_check},
      {"acceptance.05", "printed quasi-symmetric classifications", 60.0, classification_check},
      {"acceptance.06", "chain properties at p = 8, eps = 0.05, depth 150", 60.0, chain_check},
      {"acceptance.07", "symbolic patterns against the backward-orbit oracle", 60.0, oracle_check},
      {"acceptance.08", "distance inequalities at cutting times", 5.0, distance_check},
      {"acceptance.09", "bridges against the Lambda_kappa predicate", 120.0, bridges_check},
      {"acceptance.10", "link-symmetric windows are all classified", 600.0, totality_check},
      {"acceptance.11", "FP(R) divergence of two Fibonacci-like maps", 60.0, divergence_check},
  };
  return checks;
}

std::vector<Check> property_checks() {
  return {
      {"property.admissible", "kneading map admissibility", 0.0, admissible_prop},
      {"property.bridges", "bridges against Lambda_kappa", 0.0, bridges_prop},
      {"property.chain", "chain properties", 0.0, chain_prop},
      {"property.fibonacci_like", "Fibonacci-like condition", 0.0, fibonacci_like_prop},
      {"property.oracle", "symbolic patterns against the binary64 oracle", 0.0, oracle_prop},
      {"property.salient", "salient levels", 0.0, salient_prop},
  };
}

CheckResult run_check(const Check& check, const RunConfig& cfg) {
  CheckResult r;
  r.id = check.id;
  r.title = check.title;
  r.budget = check.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    check.body(cfg, r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.budget > 0.0 && r.seconds > r.budget) {
    r.pass = false;
    r.detail += "; over the time budget";
  }
  return r;
}

bool SuiteReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

SuiteReport run_suite(const std::vector<Check>& checks, const RunConfig& cfg) {
  SuiteReport rep;
  rep.results.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) rep.results[i] = run_check(checks[i], cfg);
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), checks.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rep.results.begin(), rep.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

nlohmann::json to_json(const SuiteReport& r, bool include_timing) {
  nlohmann::json j;
  j["pass"] = r.pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.results) {
    nlohmann::json e{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
    if (include_timing) {
      e["seconds"] = c.seconds;
      e["budget"] = c.budget;
    }
    j["checks"].push_back(e);
  }
  return j;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.results)
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << " (" << c.seconds << " s): " << c.detail << "\n";
  return os.str();
}

}  // namespace tentlim::harness
