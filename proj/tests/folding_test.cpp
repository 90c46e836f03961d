#include <gtest/gtest.h>

#include "tentlim/folding.hpp"
#include "tentlim/harness/golden.hpp"
#include "tentlim/numeric.hpp"

using namespace tentlim;

namespace {

KneadingMap fibonacci() { return KneadingMap::offset(2, 60); }

// drop the level-0 entries a sigma step added and lower the rest: the previous pattern comes back
std::vector<Level> undo_step(const FoldingPattern& fp) {
  std::vector<Level> out;
  for (Level l : fp.entries) {
    if (l == 0) continue;
    out.push_back(l == kInf ? kInf : l - 1);
  }
  if (fp.side == Side::R) std::reverse(out.begin(), out.end());
  return out;
}

// every odd window around a level-b entry, checked directly
bool brute_bridge(const std::vector<Level>& e, Level a, Level b) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != b) continue;
    for (std::size_t r = 1; r <= i && i + r < e.size(); ++r) {
      if (e[i - r] != a || e[i + r] != a) continue;
      bool ok = true;
      for (std::size_t d = 1; d < r && ok; ++d)
        ok = e[i - d] == e[i + d] && e[i - d] != kInf && e[i - d] < b && e[i - d] != a;
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Folding, SeedsAreValid) {
  const auto s = cutting_times_for_depth(fibonacci(), 4);
  EXPECT_NO_THROW(validate(seed_c0(), s));
  EXPECT_NO_THROW(validate(seed_r(), s));
  EXPECT_TRUE(seed_c0().anchor().has_value());
  EXPECT_TRUE(seed_r().anchor().has_value());
}

TEST(Folding, C0Prefix) {
  const auto fp = fp_c0(fibonacci(), 6);
  const auto& want = harness::golden::kC0Prefix;
  ASSERT_GE(fp.size(), want.size());
  EXPECT_TRUE(std::equal(want.begin(), want.end(), fp.entries.begin())) << fp.to_string();
}

// property: sigma only inserts level 0, keeps the anchor, and the result validates
TEST(Folding, SigmaStepInvariants) {
  for (const auto& q : {fibonacci(), KneadingMap::offset(3, 60)}) {
    const auto s = cutting_times_for_depth(q, 16);
    for (auto fp : {seed_c0(), seed_r()}) {
      for (int d = 1; d <= 14; ++d) {
        const auto next = sigma_step(fp, s);
        ASSERT_NO_THROW(validate(next, s)) << "depth " << d;
        EXPECT_EQ(next.depth, fp.depth + 1);
        EXPECT_EQ(undo_step(next), fp.entries) << "depth " << d;
        EXPECT_GT(next.size(), fp.size());
        fp = next;
      }
    }
  }
}

// property: no two adjacent entries share a level
TEST(Folding, NeighboursDiffer) {
  const auto fp = fp_c0(fibonacci(), 12);
  for (std::size_t i = 1; i < fp.size(); ++i) EXPECT_NE(fp.entries[i - 1], fp.entries[i]) << "index " << i;
}

TEST(Folding, SymbolicMatchesOracle) {
  const auto q = fibonacci();
  const auto params = solve_slope(kneading_sequence(q, 600), 60);
  const auto s = cutting_times_for_depth(q, 12);
  FoldingPattern c0 = seed_c0();
  FoldingPattern rr = seed_r();
  for (int d = 1; d <= 10; ++d) {
    c0 = sigma_step(c0, s);
    rr = sigma_step(rr, s);
    EXPECT_EQ(c0.entries, oracle_p_points_C0(params, d + 2, 2).levels()) << "C0 depth " << d;
    EXPECT_EQ(rr.entries, oracle_p_points_R(params, d + 2, 2).levels()) << "R depth " << d;
  }
}

TEST(Folding, SalientLevels) {
  const auto c0 = fp_c0(fibonacci(), 10);
  const auto sc = salient_indices(c0);
  ASSERT_GE(sc.right.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(c0.entries[sc.right[i]], static_cast<Level>(i + 1));
  const auto rr = fp_r(fibonacci(), 6);
  const auto sr = salient_indices(rr);
  ASSERT_GE(sr.right.size(), 6u);
  ASSERT_GE(sr.left.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(rr.entries[sr.right[i]], static_cast<Level>(2 * i + 1));
    EXPECT_EQ(rr.entries[sr.left[i]], static_cast<Level>(2 * i + 2));
  }
}

TEST(Folding, ClipKeepsTheRequestedEnd) {
  const auto fp = fp_c0(fibonacci(), 10);
  const auto pre = clip_prefix(fp, 50);
  ASSERT_EQ(pre.size(), 50u);
  EXPECT_TRUE(std::equal(pre.entries.begin(), pre.entries.end(), fp.entries.begin()));
  EXPECT_TRUE(pre.clipped_right);
  const auto suf = clip_suffix(fp, 50);
  ASSERT_EQ(suf.size(), 50u);
  EXPECT_TRUE(std::equal(suf.entries.begin(), suf.entries.end(), fp.entries.end() - 50));
  EXPECT_TRUE(suf.clipped_left);
}

// property: trimmed iteration agrees with the untrimmed pattern on the kept prefix
TEST(Folding, TrimmedIterationIsAPrefix) {
  const auto s = cutting_times_for_depth(fibonacci(), 16);
  const auto full = iterate(seed_c0(), s, 14);
  const auto cut = iterate(seed_c0(), s, 14, 200);
  ASSERT_LE(cut.size(), full.size());
  ASSERT_GE(cut.size(), 200u);
  EXPECT_TRUE(std::equal(cut.entries.begin(), cut.entries.begin() + 200, full.entries.begin()));
}

TEST(Bridges, MatchBruteForce) {
  const auto fp = fp_c0(fibonacci(), 11);
  int found = 0;
  for (Level b = 1; b <= 9; ++b)
    for (Level a = 0; a < b; ++a) {
      const auto r = bridges_exists(fp, a, b);
      const bool brute = brute_bridge(fp.entries, a, b);
      EXPECT_EQ(r.outcome == BridgeOutcome::found, brute) << "a = " << a << " b = " << b;
      if (r.outcome == BridgeOutcome::found) {
        ++found;
        EXPECT_EQ(fp.entries[r.center], b);
        EXPECT_EQ(fp.entries[r.center - r.radius], a);
        EXPECT_EQ(fp.entries[r.center + r.radius], a);
      }
    }
  EXPECT_GT(found, 0);
}

TEST(Bridges, RejectsBadLevels) {
  const auto fp = fp_c0(fibonacci(), 4);
  EXPECT_THROW(bridges_exists(fp, 3, 3), InvalidInput);
  EXPECT_THROW(bridges_exists(fp, -1, 3), InvalidInput);
}
