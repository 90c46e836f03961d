#include "tentlim/harness/compare.hpp"

#include <algorithm>
#include <sstream>

namespace tentlim::harness {

namespace {

const char* side_name(DivergenceSide s) {
  switch (s) {
    case DivergenceSide::right: return "right";
    case DivergenceSide::left: return "left";
    case DivergenceSide::both: return "both";
  }
  return "right";
}

// entry at `offset` from the anchor on one side, if stored
std::optional<Level> at(const FoldingPattern& fp, std::size_t anchor, std::size_t offset, bool right) {
  if (right) {
    if (anchor + offset >= fp.entries.size()) return std::nullopt;
    return fp.entries[anchor + offset];
  }
  if (offset > anchor) return std::nullopt;
  return fp.entries[anchor - offset];
}

std::size_t count_below(const std::vector<std::size_t>& idx, std::size_t anchor, std::size_t offset, bool right) {
  return static_cast<std::size_t>(std::count_if(idx.begin(), idx.end(), [&](std::size_t i) {
    const std::size_t d = right ? i - anchor : anchor - i;
    return d < offset;
  }));
}

std::string level_text(Level l) { return l == kInf ? "INF" : std::to_string(l); }

}  // namespace

std::string ComparisonReport::summary() const {
  std::ostringstream os;
  if (!divergence) {
    os << "identical to horizon (" << horizon_left << " entries left, " << horizon_right << " right of the anchor)";
    return os.str();
  }
  const auto& d = *divergence;
  os << "folding patterns diverge at offset " << d.offset << " (" << side_name(d.side) << " side, after "
     << d.salient_block << " salient points): " << level_text(d.level_a) << " vs " << level_text(d.level_b);
  return os.str();
}

ComparisonReport compare_patterns(const FoldingPattern& a, const FoldingPattern& b, int n_salient) {
  const auto aa = a.anchor();
  const auto ab = b.anchor();
  if (!aa || !ab) throw InvalidInput("comparison needs anchored patterns");
  ComparisonReport out;
  out.n_salient = n_salient;
  const auto sa = salient_indices(a);
  const auto sb = salient_indices(b);
  out.salient_right_a = sa.right.size();
  out.salient_right_b = sb.right.size();
  out.salient_left_a = sa.left.size();
  out.salient_left_b = sb.left.size();

  bool right_open = true;
  bool left_open = true;
  for (std::size_t d = 1; right_open || left_open; ++d) {
    bool diff_r = false;
    bool diff_l = false;
    Level ra = 0, rb = 0, la = 0, lb = 0;
    if (right_open) {
      const auto x = at(a, *aa, d, true);
      const auto y = at(b, *ab, d, true);
      if (!x || !y) {
        right_open = false;
      } else {
        out.horizon_right = d;
        diff_r = *x != *y;
        ra = *x;
        rb = *y;
      }
    }
    if (left_open) {
      const auto x = at(a, *aa, d, false);
      const auto y = at(b, *ab, d, false);
      if (!x || !y) {
        left_open = false;
      } else {
        out.horizon_left = d;
        diff_l = *x != *y;
        la = *x;
        lb = *y;
      }
    }
    if (diff_r || diff_l) {
      Divergence dv;
      dv.offset = d;
      dv.side = diff_r && diff_l ? DivergenceSide::both : diff_r ? DivergenceSide::right : DivergenceSide::left;
      dv.level_a = diff_r ? ra : la;
      dv.level_b = diff_r ? rb : lb;
      // both patterns agree below the offset, so counting in a suffices
      dv.salient_block = count_below(diff_r ? sa.right : sa.left, *aa, d, diff_r);
      out.divergence = dv;
      break;
    }
  }
  return out;
}

ComparisonReport compare_fp_r(const KneadingMap& q1, const KneadingMap& q2, int n_salient) {
  if (n_salient < 1) throw InvalidInput("salient count must be positive");
  const int depth = 2 * n_salient - 1;
  for (const KneadingMap* q : {&q1, &q2}) {
    const auto s = cutting_times_for_depth(*q, depth);
    if (!is_admissible(*q, s.k_max()).admissible) throw InvalidInput("kneading map is not admissible");
    if (!is_fibonacci_like(*q, s.k_max())) throw InvalidInput("kneading map is not Fibonacci-like");
  }
  return compare_patterns(fp_r(q1, n_salient), fp_r(q2, n_salient), n_salient);
}

nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json j;
  j["n_salient"] = r.n_salient;
  j["identical_to_horizon"] = r.identical();
  j["horizon"] = {{"left", r.horizon_left}, {"right", r.horizon_right}};
  j["salient"] = {{"a", {{"left", r.salient_left_a}, {"right", r.salient_right_a}}},
                  {"b", {{"left", r.salient_left_b}, {"right", r.salient_right_b}}}};
  if (r.divergence) {
    const auto& d = *r.divergence;
    j["divergence"] = {{"offset", d.offset},
                       {"side", side_name(d.side)},
                       {"level_a", level_text(d.level_a)},
                       {"level_b", level_text(d.level_b)},
                       {"salient_block", d.salient_block}};
  } else {
    j["divergence"] = nullptr;
  }
  j["summary"] = r.summary();
  return j;
}

}  // namespace tentlim::harness
