#include <gtest/gtest.h>

#include "tentlim/chains.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/harness/golden.hpp"
#include "tentlim/symmetry.hpp"

using namespace tentlim;
namespace golden = tentlim::harness::golden;

namespace {

KneadingMap fibonacci() { return KneadingMap::offset(2, 60); }

struct Setup {
  TentParams params;
  CuttingTimes s;
  BuiltChain chain;
};

const Setup& fibonacci_setup() {
  static const Setup st = [] {
    Setup x;
    x.params = solve_slope(kneading_sequence(fibonacci(), 600), 60);
    x.s = cutting_times_for_depth(fibonacci(), 140);
    x.chain = build_chain(x.params, x.s, 8, 0.05, 60);
    return x;
  }();
  return st;
}

FoldingPattern pattern(std::vector<Level> e) { return FoldingPattern{Side::C0, std::move(e), 0, false, false}; }

}  // namespace

TEST(Chains, BuiltChainVerifies) {
  const auto& st = fibonacci_setup();
  const auto rep = verify_chain(st.chain.spec, st.params, st.s, 60);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << (c.violations.empty() ? "" : c.violations[0]);
  EXPECT_NO_THROW(assign_links(st.chain.spec, st.params, 60));
}

TEST(Chains, VerifyCatchesAWideLink) {
  const auto& st = fibonacci_setup();
  auto spec = st.chain.spec;
  const auto mid = spec.g.begin() + static_cast<std::ptrdiff_t>(spec.g.size() / 2);
  spec.g.erase(mid, mid + 4);
  const auto rep = verify_chain(spec, st.params, st.s, 60);
  EXPECT_FALSE(rep.pass());
}

TEST(Chains, VerifyCatchesAFatBall) {
  const auto& st = fibonacci_setup();
  auto spec = st.chain.spec;
  spec.delta *= 1000.0;
  EXPECT_FALSE(verify_chain(spec, st.params, st.s, 60).pass());
}

TEST(Chains, BuildRejectsBadParameters) {
  const auto& st = fibonacci_setup();
  EXPECT_THROW(build_chain(st.params, st.s, -1, 0.05, 10), InvalidInput);
  EXPECT_THROW(build_chain(st.params, st.s, 8, 1.5, 10), InvalidInput);
  EXPECT_THROW(build_chain(st.params, st.s, 8, 0.05, 0), InvalidInput);
}

// property: level n and its neighbour lambda(n) share a link unless n is the lowest level there
TEST(Chains, NeighboursShareLinks) {
  const auto& st = fibonacci_setup();
  const auto links = assign_links(st.chain.spec, st.params, 60);
  const auto parent = lambda_parent(st.s);
  std::map<LinkId, int> lowest;
  for (int n = 0; n <= 60; ++n) lowest.emplace(links.link[n], n);
  for (int n = 1; n <= 60; ++n) {
    const auto k = parent(n);
    if (lowest[links.link[n]] != n && k <= 60) EXPECT_EQ(links.link[k], links.link[n]) << "level " << n;
  }
}

TEST(Chains, LinksAtOnAHandSpec) {
  ChainSpec spec;
  spec.g = {0.0, 0.25, 0.5};
  spec.delta = 0.01;
  EXPECT_EQ(spec.links_at(0.1), std::vector<LinkId>{1});
  EXPECT_EQ(spec.links_at(0.3), std::vector<LinkId>{3});
  EXPECT_EQ(spec.links_at(0.255), (std::vector<LinkId>{2, 3}));
  EXPECT_EQ(spec.links_at(0.245), (std::vector<LinkId>{1, 2}));
}

TEST(Chains, GroupAssignment) {
  const auto la = LinkAssignment::from_groups({{1, 4}, {2}}, 5);
  EXPECT_EQ(la.link[1], la.link[4]);
  EXPECT_NE(la.link[1], la.link[2]);
  EXPECT_NE(la.link[3], la.link[5]);
  EXPECT_THROW(LinkAssignment::from_groups({{1}, {1}}, 5), InvalidInput);
  EXPECT_THROW(LinkAssignment::from_groups({{9}}, 5), RangeError);
}

TEST(Chains, TurnsAreInteriorMaxima) {
  const auto fp = pattern({0, 2, 1, 3, 0, 1});
  const auto la = LinkAssignment::from_groups({}, 3);
  const auto turns = detect_turns(fp, la);
  ASSERT_EQ(turns.size(), 2u);
  EXPECT_EQ(turns[0].position, 1u);
  EXPECT_EQ(turns[1].position, 3u);
  EXPECT_EQ(turns[1].level, 3);
}

TEST(Symmetry, PalindromeIsPSymmetric) {
  const auto fp = pattern({0, 1, 0, 2, 0, 1, 0});
  const auto la = LinkAssignment::from_groups({}, 2);
  const ArcWindow w(fp, la, 0, 6);
  const auto ps = is_p_symmetric(w);
  EXPECT_TRUE(ps.symmetric);
  ASSERT_TRUE(ps.midpoint.has_value());
  EXPECT_EQ(*ps.midpoint, 3u);
  EXPECT_EQ(describe(w), SymmetryClass::P_SYMMETRIC);
  EXPECT_FALSE(is_p_symmetric(ArcWindow(fp, la, 0, 5)).symmetric);
}

TEST(Symmetry, GoldenArcWindows) {
  const auto fp = pattern(golden::kQuasiArc);
  const auto la = LinkAssignment::from_groups(golden::kLinkGroups, golden::kLinkGroupDepth);
  EXPECT_TRUE(is_quasi_p_symmetric(ArcWindow(fp, la, 2, 6)));
  EXPECT_TRUE(is_basic_quasi(ArcWindow(fp, la, 2, 6)));
  EXPECT_TRUE(is_quasi_p_symmetric(ArcWindow(fp, la, 2, 30)));
  EXPECT_FALSE(is_basic_quasi(ArcWindow(fp, la, 2, 30)));
  EXPECT_THROW(is_basic_quasi(ArcWindow(fp, la, 0, 3)), InvalidInput);
}

TEST(Symmetry, DecreasingChains) {
  const auto la = LinkAssignment::from_groups(golden::kLinkGroups, golden::kLinkGroupDepth);
  const auto basic = pattern(golden::kDecreasingBasic);
  const auto ch = decompose_quasi_chain(ArcWindow(basic, la, 0, basic.size() - 1));
  ASSERT_TRUE(ch.has_value());
  EXPECT_EQ(ch->direction, Direction::decreasing);
  EXPECT_TRUE(ch->basic);
  const auto other = pattern(golden::kDecreasingNonBasic);
  const auto ch2 = decompose_quasi_chain(ArcWindow(other, la, 0, other.size() - 1));
  ASSERT_TRUE(ch2.has_value());
  EXPECT_FALSE(ch2->basic);
  const auto none = pattern(golden::kNotDecreasing);
  EXPECT_FALSE(decompose_quasi_chain(ArcWindow(none, la, 0, none.size() - 1)).has_value());
}

// property: over every short window of a real pattern with chain links,
// p-symmetric and quasi windows are link-symmetric and every link-symmetric window gets a class
TEST(Symmetry, ClassHierarchyOnChainLinks) {
  const auto& st = fibonacci_setup();
  const auto fp = fp_c0(fibonacci(), 12);
  const auto la = assign_links(st.chain.spec, st.params, 60);
  std::size_t link_sym = 0;
  for (std::size_t i = 0; i + 1 < fp.size(); ++i)
    for (std::size_t j = i + 1; j < fp.size() && j < i + 30; ++j) {
      const ArcWindow w(fp, la, i, j);
      const bool ls = is_link_symmetric(w);
      if (is_p_symmetric(w).symmetric) EXPECT_TRUE(ls) << i << ".." << j;
      if (is_quasi_p_symmetric(w)) EXPECT_TRUE(ls) << i << ".." << j;
      if (!ls) continue;
      ++link_sym;
      const auto cl = classify_link_symmetric(w);
      EXPECT_NE(cl.cls, SymmetryClass::NONE) << i << ".." << j;
      EXPECT_LE(cl.witness_lo, w.start);
      EXPECT_GE(cl.witness_hi, w.end);
    }
  EXPECT_GT(link_sym, 100u);
}

// property: a found extension point closes a window symmetric or quasi-symmetric about the tip
TEST(Symmetry, ExtensionsCloseSymmetricWindows) {
  const auto& st = fibonacci_setup();
  const auto fp = fp_c0(fibonacci(), 14);
  const auto la = assign_links(st.chain.spec, st.params, 60);
  std::size_t basic = 0;
  std::size_t found = 0;
  for (std::size_t i = 0; i + 1 < fp.size(); ++i)
    for (std::size_t j = i + 2; j < fp.size() && j < i + 24; ++j) {
      const ArcWindow w(fp, la, i, j);
      const auto qs = quasi_structure(w);
      if (!qs || !is_basic_quasi(w)) continue;
      const auto lo_tip = w.level(i) == w.level(j) ? 0 : 1;
      if (!lo_tip) continue;  // tips at one level have no higher tip to extend about
      ++basic;
      for (const auto& ext : {extend_high(w), extend_low(w)}) {
        if (ext.status != SearchStatus::found) continue;
        ++found;
        const std::size_t m = qs->midpoint;
        const ArcWindow span(fp, la, std::min(m, ext.position), std::max(m, ext.position));
        EXPECT_TRUE(is_p_symmetric(span).symmetric || is_quasi_p_symmetric(span)) << i << ".." << j;
      }
    }
  EXPECT_GT(basic, 0u);
  EXPECT_GT(found, 0u);
}
