#include <gtest/gtest.h>

#include "tentlim/harness/acceptance.hpp"
#include "tentlim/harness/compare.hpp"
#include "tentlim/harness/config.hpp"

using namespace tentlim;
using namespace tentlim::harness;

namespace {

FoldingPattern pattern(Side side, std::vector<Level> e) { return FoldingPattern{side, std::move(e), 0, false, false}; }

}  // namespace

TEST(Config, KneadingSources) {
  const auto fib = load_kneading("fibonacci");
  for (int k = 3; k < 30; ++k) EXPECT_EQ(fib(k), k - 2);
  const auto off = load_kneading("offset:3");
  EXPECT_EQ(off(10), 7);
  const auto ex = load_kneading("[0, 0, 1, 2]");
  EXPECT_EQ(ex.kind(), KneadingMap::Kind::explicit_list);
  EXPECT_EQ(ex(4), 2);
  const auto j = kneading_to_json(off);
  EXPECT_EQ(kneading_from_json(j)(10), 7);
}

TEST(Config, BadSourcesThrow) {
  EXPECT_THROW(load_kneading("offset:x"), ConfigError);
  EXPECT_THROW(load_kneading("{\"kind\": \"nope\"}"), ConfigError);
  EXPECT_THROW(load_kneading("/no/such/file.json"), ConfigError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Config, ValidateRejectsZeroDepth) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.fold_depth = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  RunConfig eps;
  eps.epsilon = 2.0;
  EXPECT_THROW(eps.validate(), ConfigError);
}

TEST(Config, ParseLevels) {
  EXPECT_EQ(parse_levels("0 1 INF inf 3"), (std::vector<Level>{0, 1, kInf, kInf, 3}));
  EXPECT_THROW(parse_levels("0 x"), ConfigError);
}

TEST(Compare, IdenticalPatterns) {
  const auto a = pattern(Side::R, {2, 0, 1, kInf, 0, 3});
  const auto r = compare_patterns(a, a);
  EXPECT_TRUE(r.identical());
}

TEST(Compare, FirstDivergenceWins) {
  const auto a = pattern(Side::R, {2, 0, 1, kInf, 0, 3, 0});
  const auto b = pattern(Side::R, {4, 0, 1, kInf, 0, 3, 0});
  const auto r = compare_patterns(a, b);
  ASSERT_TRUE(r.divergence.has_value());
  EXPECT_EQ(r.divergence->offset, 3u);
  EXPECT_EQ(r.divergence->side, DivergenceSide::left);
  EXPECT_EQ(r.divergence->level_a, 2);
  EXPECT_EQ(r.divergence->level_b, 4);
}

// property: swapping the arguments swaps the levels and nothing else
TEST(Compare, SymmetricInItsArguments) {
  const auto q1 = KneadingMap::offset(2, 60);
  const auto q2 = KneadingMap::offset(3, 60);
  const auto ab = compare_fp_r(q1, q2, 5);
  const auto ba = compare_fp_r(q2, q1, 5);
  ASSERT_EQ(ab.divergence.has_value(), ba.divergence.has_value());
  ASSERT_TRUE(ab.divergence.has_value());
  EXPECT_EQ(ab.divergence->offset, ba.divergence->offset);
  EXPECT_EQ(ab.divergence->side, ba.divergence->side);
  EXPECT_EQ(ab.divergence->level_a, ba.divergence->level_b);
  EXPECT_EQ(ab.divergence->level_b, ba.divergence->level_a);
}

TEST(Compare, RejectsNonFibonacciLikeMaps) {
  EXPECT_ANY_THROW(compare_fp_r(KneadingMap::offset(2, 60), KneadingMap::explicit_values(std::vector<int>(30, 0)), 3));
}

TEST(Suite, PropertyChecksPass) {
  RunConfig cfg;
  cfg.salient = 6;
  cfg.fold_depth = 12;
  cfg.chain_depth = 60;
  const auto rep = run_suite(property_checks(), cfg);
  for (const auto& r : rep.results) EXPECT_TRUE(r.pass) << r.id << ": " << r.detail;
  const auto j = to_json(rep, false);
  EXPECT_FALSE(j.dump().find("seconds") != std::string::npos);
}

TEST(Suite, FailingCheckIsReported) {
  const std::vector<Check> checks{{"x.fail", "always fails", 0.0, [](const RunConfig&, CheckResult& r) {
                                     r.pass = false;
                                     r.detail = "boom";
                                   }},
                                  {"x.throw", "throws", 0.0,
                                   [](const RunConfig&, CheckResult&) { throw std::runtime_error("bad"); }}};
  const auto rep = run_suite(checks, RunConfig{});
  EXPECT_FALSE(rep.pass());
  ASSERT_EQ(rep.results.size(), 2u);
  for (const auto& r : rep.results) EXPECT_FALSE(r.pass);
}
