#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tentlim/folding.hpp"

namespace tentlim::harness {

enum class DivergenceSide { right, left, both };

struct Divergence {
  std::size_t offset = 0;  // distance from the anchor, >= 1
  DivergenceSide side = DivergenceSide::right;
  std::int64_t level_a = 0;  // kInf when the entry is the anchor
  std::int64_t level_b = 0;
  std::size_t salient_block = 0;  // salient points of the diverging side strictly inside the offset
};

struct ComparisonReport {
  int n_salient = 0;
  std::optional<Divergence> divergence;  // empty: identical to horizon
  std::size_t horizon_right = 0;         // entries compared right of the anchor
  std::size_t horizon_left = 0;
  std::size_t salient_right_a = 0, salient_right_b = 0;
  std::size_t salient_left_a = 0, salient_left_b = 0;

  bool identical() const { return !divergence.has_value(); }
  std::string summary() const;
};

// Both patterns aligned at rho and read outwards; the smallest offset where an entry differs on either side.
// A pattern that simply ends is a horizon, not a divergence.
ComparisonReport compare_patterns(const FoldingPattern& a, const FoldingPattern& b, int n_salient = 0);

// Requires both maps admissible and Fibonacci-like on the range the patterns use; InvalidInput otherwise.
ComparisonReport compare_fp_r(const KneadingMap& q1, const KneadingMap& q2, int n_salient);

nlohmann::json to_json(const ComparisonReport& r);

}  // namespace tentlim::harness
