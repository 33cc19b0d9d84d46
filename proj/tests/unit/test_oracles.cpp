#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cvxlat/analysis.hpp"
#include "cvxlat/boolean_subm.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/verify/oracles.hpp"
#include "cvxlat/verify/random.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;
using namespace cvxlat::verify;

TEST(HullOracle, ChainSteps) {
  const std::vector<QPoint> tri{P({0, 0}), P({4, 0}), P({0, 4})};
  const auto h = hull_chain(P({1, 1}), tri);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->chain.back(), P({1, 1}));
  EXPECT_EQ(h->chain.size(), 3U);
  EXPECT_FALSE(hull_oracle(P({3, 3}), tri));
  EXPECT_TRUE(hull_oracle(P({2, 0}), tri));
}

TEST(HullOracle, AgreesWithLp) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto y = random_points(rng, 1 + i % 6, d, 2);
    const auto q = random_points(rng, 1, d, 3, 2)[0];
    EXPECT_EQ(hull_member(q, y), hull_oracle(q, y)) << i;
  }
}

TEST(BruteClosedSets, AgreesWithNextClosure) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 15; ++i) {
    const auto pts = random_points(rng, 3 + i % 7, 2, 2);
    auto fast = enumerate_closed_sets(FiniteGround(pts)).sets();
    std::sort(fast.begin(), fast.end());
    EXPECT_EQ(fast, brute_closed_sets(pts)) << i;
  }
}

TEST(BruteSubm, Counts) {
  EXPECT_EQ(brute_subm_count(0), 4U);
  EXPECT_EQ(brute_subm_count(1), 14U);
  EXPECT_EQ(brute_subm_count(2), 122U);
  EXPECT_EQ(brute_subm_count(3), count_subm(3));
}

TEST(LiteralDRelation, MatchesChecker) {
  for (const auto& l : {chain(4), boolean(3), m3(), n5()}) {
    auto fast = d_relation(l);
    auto slow = literal_d_relation(l);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    EXPECT_EQ(fast, slow);
    EXPECT_EQ(literal_d_cycle(l), !check_lower_bounded(l).holds);
  }
  const auto four = enumerate_closed_sets(FiniteGround(collinear(4)));
  EXPECT_TRUE(literal_d_cycle(four));
  EXPECT_FALSE(literal_d_cycle(enumerate_closed_sets(FiniteGround(collinear(3)))));
}

TEST(BruteFaces, MatchesFaceEnumeration) {
  const std::vector<std::vector<QPoint>> polys{
      {P({0, 0}), P({1, 0}), P({0, 1})},
      parabola_polygon(5),
      {P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})},
      {P({0, 0, 0}), P({1, 0, 0}), P({1, 1, 0}), P({0, 1, 0}), P({0, 0, 1}), P({1, 0, 1}), P({1, 1, 1}), P({0, 1, 1})},
  };
  const std::vector<std::size_t> expected{7, 11, 15, 27};
  for (std::size_t i = 0; i < polys.size(); ++i) {
    EXPECT_EQ(brute_face_count(polys[i]), expected[i]);
    EXPECT_EQ(faces(VPolytope::from_points(polys[i])).size(), expected[i]);
  }
}
