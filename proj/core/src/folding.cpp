#include "tentlim/folding.hpp"

#include <algorithm>
#include <sstream>

namespace tentlim {

std::optional<std::size_t> FoldingPattern::anchor() const {
  const auto it = std::find(entries.begin(), entries.end(), kInf);
  if (it == entries.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

std::string FoldingPattern::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    if (entries[i] == kInf)
      os << "INF";
    else
      os << entries[i];
  }
  return os.str();
}

FoldingPattern seed_c0() { return FoldingPattern{Side::C0, {kInf, 0}, 0, false, false}; }

FoldingPattern seed_r() { return FoldingPattern{Side::R, {0, kInf, 1}, 0, false, false}; }

Level gap_label(Side side, Level a, Level b, const CuttingTimes& s) {
  if (a == kInf && b == kInf) throw InvalidInput("two anchors next to each other");
  if (a == kInf || b == kInf) {
    if (side == Side::R) return kAnchorGap;
    if (b == kInf) throw InvalidInput("C0 anchor must be the left end");
    if (b != 0) throw InvalidInput("C0 anchor gap must be flanked by level 0");
    return 1;
  }
  if (a < 0 || b < 0) throw InvalidInput("negative level");
  const Level n = std::max(a, b) + 1;
  if (n < 2) throw InvalidInput("adjacent entries of equal level " + std::to_string(a));
  if (std::min(a, b) + 1 != s.beta(n))
    throw InvalidInput("gap (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") does not project onto a level D_n: beta(" + std::to_string(n) +
                       ") = " + std::to_string(s.beta(n)));
  return n;
}

std::vector<Level> gap_labels(const FoldingPattern& fp, const CuttingTimes& s) {
  std::vector<Level> out;
  if (fp.entries.size() < 2) return out;
  out.reserve(fp.entries.size() - 1);
  for (std::size_t i = 1; i < fp.entries.size(); ++i)
    out.push_back(gap_label(fp.side, fp.entries[i - 1], fp.entries[i], s));
  return out;
}

void validate(const FoldingPattern& fp, const CuttingTimes& s) {
  const auto& e = fp.entries;
  std::size_t anchors = 0;
  for (auto v : e) {
    if (v == kInf) ++anchors;
    else if (v < 0) throw InvalidInput("negative level");
  }
  if (anchors > 1) throw InvalidInput("more than one anchor");
  gap_labels(fp, s);
  // equal levels need a higher one between them: nearest non-lower entry to the left is never equal
  std::vector<Level> stack;
  for (auto v : e) {
    while (!stack.empty() && stack.back() < v) stack.pop_back();
    if (!stack.empty() && stack.back() == v && v != kInf)
      throw InvalidInput("two entries of level " + std::to_string(v) + " without a higher one between");
    stack.push_back(v);
  }
  const auto a = fp.anchor();
  if (fp.side == Side::C0 && a && *a != 0) throw InvalidInput("C0 anchor must be the first entry");
  if (fp.side == Side::R && a) {
    if ((*a > 0 && e[*a - 1] != 0) || (*a + 1 < e.size() && e[*a + 1] != 1))
      throw InvalidInput("rho must have level 0 on its left and level 1 on its right");
  }
}

namespace {

bool insert_in_gap(Side side, Level a, Level b, const CuttingTimes& s) {
  if (side == Side::C0 && a == kInf) return true;
  if (side == Side::R && b == kInf) return false;
  if (side == Side::R && a == kInf) return true;
  const Level n = gap_label(side, a, b, s);
  return s.is_cutting(n);
}

}  // namespace

FoldingPattern sigma_step(const FoldingPattern& fp, const CuttingTimes& s) {
  validate(fp, s);
  FoldingPattern out;
  out.side = fp.side;
  out.depth = fp.depth + 1;
  out.clipped_left = fp.clipped_left;
  out.clipped_right = fp.clipped_right;
  out.entries.reserve(fp.entries.size() * 2);
  const auto& e = fp.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0 && insert_in_gap(fp.side, e[i - 1], e[i], s)) out.entries.push_back(0);
    out.entries.push_back(e[i] == kInf ? kInf : e[i] + 1);
  }
  if (fp.side == Side::R) {
    std::reverse(out.entries.begin(), out.entries.end());
    std::swap(out.clipped_left, out.clipped_right);
  }
  return out;
}

FoldingPattern clip_prefix(const FoldingPattern& fp, std::size_t width) {
  FoldingPattern out = fp;
  if (out.entries.size() > width) {
    out.entries.resize(width);
    out.clipped_right = true;
  }
  return out;
}

FoldingPattern clip_suffix(const FoldingPattern& fp, std::size_t width) {
  FoldingPattern out = fp;
  if (out.entries.size() > width) {
    out.entries.erase(out.entries.begin(), out.entries.end() - static_cast<std::ptrdiff_t>(width));
    out.clipped_left = true;
  }
  return out;
}

FoldingPattern clip_around_anchor(const FoldingPattern& fp, std::size_t width) {
  const auto a = fp.anchor();
  if (!a) throw InvalidInput("pattern has no anchor to clip around");
  FoldingPattern out = fp;
  const std::size_t lo = *a > width ? *a - width : 0;
  const std::size_t hi = std::min(fp.entries.size(), *a + width + 1);
  out.entries.assign(fp.entries.begin() + static_cast<std::ptrdiff_t>(lo),
                     fp.entries.begin() + static_cast<std::ptrdiff_t>(hi));
  out.clipped_left = fp.clipped_left || lo > 0;
  out.clipped_right = fp.clipped_right || hi < fp.entries.size();
  return out;
}

FoldingPattern trim(const FoldingPattern& fp, std::size_t width) {
  if (fp.clipped_left && fp.clipped_right) return clip_around_anchor(fp, width);
  if (fp.clipped_right) return clip_prefix(fp, width);
  if (fp.clipped_left) return clip_suffix(fp, width);
  return fp;
}

FoldingPattern iterate(FoldingPattern fp, const CuttingTimes& s, int steps, std::size_t width) {
  const std::size_t cap = max_entries();
  for (int i = 0; i < steps; ++i) {
    FoldingPattern next = sigma_step(fp, s);
    if (width > 0) next = trim(next, width);
    if (next.entries.size() > cap)
      throw CapExceeded("pattern at depth " + std::to_string(next.depth) + " has " +
                            std::to_string(next.entries.size()) + " entries, above the cap of " +
                            std::to_string(cap),
                        std::move(fp));
    fp = std::move(next);
  }
  return fp;
}

CuttingTimes cutting_times_for_depth(const KneadingMap& q, int depth) {
  // levels stay below depth + 2, and beta needs a cutting time at or above every label
  int k = 1;
  for (;;) {
    const auto s = cutting_times(q, k);
    if (s[k] > depth + 3) return s;
    ++k;
    if (!q.defined_at(k)) throw RangeError("kneading map too short for depth " + std::to_string(depth));
  }
}

FoldingPattern fp_c0(const KneadingMap& q, int n_salient) {
  if (n_salient < 0) throw InvalidInput("salient count must be non-negative");
  const auto s = cutting_times_for_depth(q, n_salient);
  const auto adm = is_admissible(q, s.k_max());
  if (!adm.admissible) throw InvalidInput("kneading map is not admissible");
  return iterate(seed_c0(), s, n_salient);
}

FoldingPattern fp_r(const KneadingMap& q, int n_salient) {
  if (n_salient < 1) throw InvalidInput("salient count must be positive");
  const int depth = 2 * n_salient - 1;
  const auto s = cutting_times_for_depth(q, depth);
  const auto adm = is_admissible(q, s.k_max());
  if (!adm.admissible) throw InvalidInput("kneading map is not admissible");
  return iterate(seed_r(), s, depth);
}

SalientIndex salient_indices(const FoldingPattern& fp) {
  SalientIndex out;
  const auto a = fp.anchor();
  if (!a) return out;
  const auto& e = fp.entries;
  Level best = 0;
  for (std::size_t i = *a + 1; i < e.size(); ++i)
    if (e[i] > best) {
      best = e[i];
      out.right.push_back(i);
    }
  best = 0;
  for (std::size_t i = *a; i-- > 0;)
    if (e[i] > best) {
      best = e[i];
      out.left.push_back(i);
    }
  return out;
}

BridgeResult bridges_exists(const FoldingPattern& fp, Level a, Level b) {
  if (!(b > a) || a < 0) throw InvalidInput("bridges need 0 <= a < b");
  const auto& e = fp.entries;
  bool open = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != b) continue;
    for (std::size_t d = 1;; ++d) {
      if (d > i || i + d >= e.size()) {
        open = true;
        break;
      }
      const Level l = e[i - d];
      const Level r = e[i + d];
      if (l != r || l == kInf || l >= b) break;
      if (l == a) return {BridgeOutcome::found, i, d};
    }
  }
  return {open ? BridgeOutcome::inconclusive : BridgeOutcome::absent, 0, 0};
}

}  // namespace tentlim
