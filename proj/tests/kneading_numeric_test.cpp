#include <cmath>

#include <gtest/gtest.h>

#include "tentlim/deep.hpp"
#include "tentlim/kneading.hpp"
#include "tentlim/numeric.hpp"

using namespace tentlim;

namespace {

std::vector<KneadingMap> sample_maps() {
  return {KneadingMap::fibonacci(40), KneadingMap::offset(1, 40), KneadingMap::offset(3, 40),
          KneadingMap::offset(4, 40), KneadingMap::explicit_values({0, 0, 1, 1, 2, 3, 3, 4, 5, 6, 7, 8})};
}

const TentParams& fibonacci_params() {
  static const TentParams p = solve_slope(kneading_sequence(KneadingMap::fibonacci(60), 600), 60);
  return p;
}

}  // namespace

TEST(Kneading, FibonacciCuttingTimes) {
  const auto s = cutting_times(KneadingMap::fibonacci(20), 20);
  const std::vector<int> want{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(s.small(static_cast<int>(k)), want[k]) << "k = " << k;
}

TEST(Kneading, QOfZeroIsZero) {
  for (const auto& q : sample_maps()) EXPECT_EQ(q(0), 0);
}

TEST(Kneading, ExplicitMapStopsAtItsEnd) {
  const auto q = KneadingMap::explicit_values({0, 0, 1});
  EXPECT_TRUE(q.defined_at(3));
  EXPECT_FALSE(q.defined_at(4));
  EXPECT_ANY_THROW(q(4));
}

TEST(Kneading, RejectsBadValues) {
  EXPECT_ANY_THROW(KneadingMap::explicit_values({1}));      // Q(k) < k
  EXPECT_ANY_THROW(KneadingMap::explicit_values({0, -1}));  // negative
}

// property: S_k = S_{k-1} + S_{Q(k)} with S_0 = 1, checked against a plain recurrence
TEST(Kneading, CuttingTimeRecurrence) {
  for (const auto& q : sample_maps()) {
    const int k_max = std::min(q.k_max(), 30);
    const auto s = cutting_times(q, k_max);
    std::vector<long long> ref{1};
    for (int k = 1; k <= k_max; ++k) ref.push_back(ref[k - 1] + ref[q(k)]);
    for (int k = 0; k <= k_max; ++k) EXPECT_EQ(s.small(k), ref[k]);
  }
}

TEST(Kneading, BetaIsDistanceToLastCuttingTime) {
  const auto s = cutting_times(KneadingMap::offset(3, 30), 30);
  for (std::int64_t n = 2; n <= 2000; ++n) {
    std::int64_t below = 1;
    for (int k = 0; s.small(k) < n; ++k) below = s.small(k);
    EXPECT_EQ(s.beta(n), n - below) << "n = " << n;
  }
}

// property: nu_{S_{k-1}+1..S_k} = nu_{1..S_{Q(k)}} with the last symbol flipped
TEST(Kneading, BlockRule) {
  for (const auto& q : sample_maps()) {
    const int k_max = std::min(q.k_max(), 14);
    const auto s = cutting_times(q, k_max);
    const auto nu = kneading_sequence(q, static_cast<int>(s.small(k_max)));
    EXPECT_EQ(nu[1], 1);
    for (int k = 1; k <= k_max; ++k) {
      const auto lo = s.small(k - 1);
      const auto len = s.small(q(k));
      ASSERT_EQ(lo + len, s.small(k));
      for (std::int64_t j = 1; j <= len; ++j) {
        const int want = j == len ? 1 - nu[static_cast<int>(j)] : nu[static_cast<int>(j)];
        EXPECT_EQ(nu[static_cast<int>(lo + j)], want) << "k = " << k << " j = " << j;
      }
    }
  }
}

TEST(Kneading, Admissibility) {
  EXPECT_TRUE(is_admissible(KneadingMap::fibonacci(40), 40).admissible);
  EXPECT_TRUE(is_admissible(KneadingMap::offset(3, 40), 40).admissible);
  const auto bad = is_admissible(KneadingMap::explicit_values({0, 1, 0, 0}), 4);
  EXPECT_FALSE(bad.admissible);
  ASSERT_TRUE(bad.first_violation.has_value());
  EXPECT_EQ(*bad.first_violation, 2);
}

TEST(Kneading, FibonacciLike) {
  EXPECT_TRUE(is_fibonacci_like(KneadingMap::fibonacci(40), 40));
  EXPECT_TRUE(is_fibonacci_like(KneadingMap::offset(3, 40), 40));
  EXPECT_FALSE(is_fibonacci_like(KneadingMap::explicit_values(std::vector<int>(20, 0)), 20));
}

TEST(Kneading, FibonacciKappaCoversEverything) {
  const auto kd = kappa_data(kneading_sequence(KneadingMap::fibonacci(40), 400));
  EXPECT_EQ(kd.kappa, 3);
  for (std::int64_t n = 1; n < 200; ++n) EXPECT_TRUE(kd.in_lambda(n));
}

// property: the symbolic order of orbit points agrees with the numeric orbit where they are well apart
TEST(Kneading, SymbolicOrderMatchesOrbit) {
  const auto& p = fibonacci_params();
  const auto nu = kneading_sequence(KneadingMap::fibonacci(60), 600);
  int checked = 0;
  for (int m = 1; m <= 30; ++m)
    for (int n = 1; n <= 30; ++n) {
      if (m == n || std::abs(p.orbit[m] - p.orbit[n]) < 1e-9) continue;
      const auto o = compare_points(m, n, nu);
      ASSERT_NE(o, PointOrder::undecided);
      EXPECT_EQ(o == PointOrder::less, p.orbit[m] < p.orbit[n]) << m << " vs " << n;
      ++checked;
    }
  EXPECT_GT(checked, 500);
  for (int a = 1; a <= 25; ++a)
    for (int b = 1; b <= 25; ++b) {
      const double da = std::abs(p.orbit[a] - 0.5);
      const double db = std::abs(p.orbit[b] - 0.5);
      if (a == b || std::abs(da - db) < 1e-9) continue;
      const auto o = compare_distance_to_critical(a, b, nu);
      if (o == PointOrder::undecided) continue;
      EXPECT_EQ(o == PointOrder::less, da < db) << a << " vs " << b;
    }
}

TEST(Numeric, SlopeReproducesItinerary) {
  const auto& p = fibonacci_params();
  const auto nu = kneading_sequence(KneadingMap::fibonacci(60), 600);
  EXPECT_GT(p.s, std::sqrt(2.0));
  EXPECT_LT(p.s, 2.0);
  const auto it = itinerary(p.s, 40);
  for (int j = 1; j <= 40; ++j) EXPECT_EQ(it[j - 1], nu[j]) << "symbol " << j;
  EXPECT_NEAR(p.orbit[1], p.s / 2.0, 1e-15);
}

// property: the shadowed orbit is a pseudo-orbit with tiny one-step error
TEST(Numeric, ShadowOrbitIsConsistent) {
  const auto& p = fibonacci_params();
  ASSERT_GE(p.depth(), 300);
  for (int n = 0; n < 300; ++n) EXPECT_NEAR(tent(p.s, p.orbit[n]), p.orbit[n + 1], 1e-9) << "n = " << n;
}

TEST(Numeric, LambdaParentChainsEndAtZero) {
  const auto s = cutting_times(KneadingMap::fibonacci(30), 30);
  const auto parent = lambda_parent(s);
  for (std::int64_t n = 1; n < 500; ++n) {
    EXPECT_EQ(parent(n), s.beta(n + 1) - 1);
    const auto chain = parent_chain(n, parent, 0);
    ASSERT_FALSE(chain.empty());
    EXPECT_EQ(chain.front(), n);
    EXPECT_EQ(chain.back(), 0);
  }
}

TEST(Deep, SlopeAgreesWithBinary64) {
  const auto nu = kneading_sequence(KneadingMap::fibonacci(60), 600);
  const auto s = deep::solve_slope(nu, 250);
  EXPECT_NEAR(static_cast<double>(s), fibonacci_params().s, 1e-12);
}

TEST(Deep, WindowPointsProjectOntoTheOrbit) {
  const auto nu = kneading_sequence(KneadingMap::fibonacci(60), 600);
  const auto s = deep::solve_slope(nu, 250);
  const auto orb = deep::orbit(s, 40);
  const deep::Real half = deep::Real(1) / 2;
  const auto pts = deep::window(s, half - deep::Real(1e-4), half + deep::Real(1e-4), 30);
  ASSERT_FALSE(pts.empty());
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1].t, pts[i].t);
  for (const auto& pt : pts) EXPECT_LT(deep::projection_residual(s, orb, pt, 30), 1e-60);
}
