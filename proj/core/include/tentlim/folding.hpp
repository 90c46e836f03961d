#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tentlim/kneading.hpp"
#include "tentlim/numeric.hpp"

namespace tentlim {

// Label of the two gaps next to rho; they project onto [c, c_1] and have no single D_n.
inline constexpr Level kAnchorGap = -1;

struct FoldingPattern {
  Side side = Side::C0;
  std::vector<Level> entries;  // kInf marks the anchor
  int depth = 0;               // sigma steps applied to the seed
  // a clipped end means the arc continues beyond the stored entries
  bool clipped_left = false;
  bool clipped_right = false;

  std::size_t size() const { return entries.size(); }
  std::optional<std::size_t> anchor() const;
  std::string to_string() const;
};

// The cap was hit; `partial` is the last pattern that fit.
class CapExceeded : public RangeError {
 public:
  CapExceeded(const std::string& what, FoldingPattern partial)
      : RangeError(what), partial(std::move(partial)) {}
  FoldingPattern partial;
};

FoldingPattern seed_c0();
FoldingPattern seed_r();

// Gap between levels a and b, p-points flanking it: n = max(a, b) + 1 with min(a, b) + 1 = beta(n),
// i.e. the gap projects onto D_n one coordinate further down. C0's anchor gap is D_1.
Level gap_label(Side side, Level a, Level b, const CuttingTimes& s);
std::vector<Level> gap_labels(const FoldingPattern& fp, const CuttingTimes& s);

// Throws InvalidInput naming the first violated invariant.
void validate(const FoldingPattern& fp, const CuttingTimes& s);

// One application of sigma: a level-0 entry appears in every gap whose label is a cutting time
// (always in C0's anchor gap and right of rho, never left of rho), then all levels rise by one.
// R is reversed afterwards since sigma flips the orientation of the rho arc.
FoldingPattern sigma_step(const FoldingPattern& fp, const CuttingTimes& s);

// Windows that sigma maps into windows of the next step: keep `width` entries from the unclipped end,
// or `width` entries on each side of the anchor when both ends are clipped.
FoldingPattern clip_prefix(const FoldingPattern& fp, std::size_t width);
FoldingPattern clip_suffix(const FoldingPattern& fp, std::size_t width);
FoldingPattern clip_around_anchor(const FoldingPattern& fp, std::size_t width);
FoldingPattern trim(const FoldingPattern& fp, std::size_t width);

// steps sigma steps; width > 0 re-trims after each step. Throws CapExceeded past max_entries().
FoldingPattern iterate(FoldingPattern fp, const CuttingTimes& s, int steps, std::size_t width = 0);

// Cutting times long enough for patterns of the given depth.
CuttingTimes cutting_times_for_depth(const KneadingMap& q, int depth);

// Depth n_salient: salient levels 1..n_salient, the last one being the right end.
FoldingPattern fp_c0(const KneadingMap& q, int n_salient);
// Depth 2 n_salient - 1: right salient levels 1, 3, .., 2n-1 and left ones 2, 4, .., 2n.
FoldingPattern fp_r(const KneadingMap& q, int n_salient);

struct SalientIndex {
  std::vector<std::size_t> right;  // t^1, t^2, ... (s_1, s_2, ... for C0)
  std::vector<std::size_t> left;   // t^-1, t^-2, ...
};

// Entries strictly above every level between them and the anchor, the neighbouring level 0 excluded.
SalientIndex salient_indices(const FoldingPattern& fp);

enum class BridgeOutcome { found, absent, inconclusive };

struct BridgeResult {
  BridgeOutcome outcome = BridgeOutcome::absent;
  std::size_t center = 0;  // level-b entry of the witness
  std::size_t radius = 0;  // the witness is [center - radius, center + radius]
};

// A palindromic window a .. b .. a around a level-b entry with every interior level below b and no
// interior a. `absent` only speaks for this pattern: every candidate was blocked inside it.
BridgeResult bridges_exists(const FoldingPattern& fp, Level a, Level b);

}  // namespace tentlim
