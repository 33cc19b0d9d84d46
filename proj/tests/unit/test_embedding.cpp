#include <gtest/gtest.h>

#include "cvxlat/boolean_subm.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/simplex_embedding.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

TEST(BaseSimplex, Vertices) {
  EXPECT_EQ(base_simplex(1).vertices(), (std::vector<QPoint>{P({0}), P({1})}));
  EXPECT_EQ(base_simplex(2).vertices(), (std::vector<QPoint>{P({0, 0}), P({1, 0}), P({0, 1})}));
  EXPECT_EQ(base_simplex(3).vertices().size(), 4U);
  EXPECT_THROW(base_simplex(0), InputError);
}

TEST(Shrink, Homothety) {
  const auto s = base_simplex(2);
  EXPECT_EQ(shrink(s, 1).vertices(), s.vertices());
  EXPECT_EQ(shrink(s, R(1, 2)).vertices(),
            (std::vector<QPoint>{P({R(1, 6), R(1, 6)}), P({R(2, 3), R(1, 6)}), P({R(1, 6), R(2, 3)})}));
  EXPECT_EQ(shrink(base_simplex(1), R(1, 2)).vertices(), (std::vector<QPoint>{P({R(1, 4)}), P({R(3, 4)})}));
  EXPECT_THROW(shrink(s, 0), InputError);
  EXPECT_THROW(shrink(s, R(3, 2)), InputError);
}

TEST(PPoint, Examples) {
  const auto s = base_simplex(2);
  EXPECT_EQ(p_point(s, 0, 0b111, 2, R(1, 2)), P({0, R(1, 6)}));
  EXPECT_EQ(p_point(s, 1, 0b111, 2, R(1, 2))[1], R(1, 6));
  // |A| = 2: the shrunken endpoint itself.
  EXPECT_EQ(p_point(s, 0, 0b011, 1, R(1, 2)), P({R(1, 4), 0}));
  EXPECT_THROW(p_point(s, 0, 0b011, 0, R(1, 2)), InputError);
  EXPECT_THROW(p_point(s, 0, 0b011, 2, R(1, 2)), InputError);
  EXPECT_THROW(p_point(s, 0, 0b011, 1, 1), InputError);
}

TEST(PPoint, StrictlyBetween) {
  const auto s = base_simplex(3);
  for (Mask a = 1; a <= 0b1111; ++a) {
    for (const auto i : mask_members(a)) {
      for (const auto j : mask_members(a)) {
        if (i == j) continue;
        const auto q = p_point(s, i, a, j, R(1, 3));
        const Segment open(s.vertices()[i], s.vertices()[j], false, false);
        MixedGenerators g(3);
        g.add_segment(open);
        EXPECT_TRUE(strict_hull_member(q, g));
      }
    }
  }
}

TEST(TUPolytopes, EdgeCase) {
  const auto s = base_simplex(2);
  const auto t = t_polytope(s, 0b011, R(1, 2), 1);
  EXPECT_EQ(t.vertices(), (std::vector<QPoint>{P({0, 0}), P({R(1, 4), 0})}));
  const auto u = u_polytope(s, 0b011, R(1, 2), 0);
  EXPECT_EQ(u.vertices(), t.vertices());
  EXPECT_EQ(t_polytope(s, 0b111, R(1, 2), 2).vertices().size(), 4U);
}

TEST(Schedule, Values) {
  const auto s1 = make_schedule(1);
  EXPECT_EQ(s1.shrink, (std::vector<Rat>{R(1, 2), 0}));
  const auto s2 = make_schedule(2);
  EXPECT_EQ(s2.shrink, (std::vector<Rat>{R(1, 2), R(1, 4), 0}));
  const auto simplex = base_simplex(2);
  EXPECT_TRUE(next_level_condition(simplex, 0, s2.shrink[0], s2.shrink[1]));
  EXPECT_TRUE(next_level_condition(simplex, 0, s2.shrink[0], s2.shrink[1] / 2));
  EXPECT_THROW(make_schedule(4), UnsupportedError);
}

TEST(GroundSet, SizesAndLabels) {
  std::vector<GroundLabel> labels;
  const auto x1 = ground_set(build_table(1), &labels);
  EXPECT_EQ(x1.size(), 3U);
  EXPECT_EQ(labels[0].text(), "v");
  const auto ct = build_table(2);
  const auto x2 = ground_set(ct, &labels);
  EXPECT_EQ(x2.size(), 10U);
  EXPECT_EQ(x2.point(0), P({R(1, 3), R(1, 3)}));
  EXPECT_EQ(labels[1].text(), "p(0,{0,1})");
  for (Mask a = 1; a < 0b111; ++a) {
    EXPECT_EQ(extreme_points(ct.shrunken.at(a)).size(), mask_members(a).size());
  }
  EXPECT_EQ(ground_set(build_table(2)).points(), x2.points());
}

TEST(Lemmas, HoldForN2) {
  for (const auto& c : verify_lemmas(build_table(2))) {
    EXPECT_TRUE(c.holds) << c.lemma << ": " << c.offending;
  }
}

TEST(Lemmas, HoldForN1) {
  for (const auto& c : verify_lemmas(build_table(1))) EXPECT_TRUE(c.holds) << c.lemma;
}

TEST(Lemmas, EqualShrinkIsRejected) {
  auto sched = make_schedule(2);
  sched.shrink[1] = sched.shrink[0];
  bool failed = false;
  for (const auto& c : verify_lemmas(build_table(2, sched))) {
    if (c.lemma == "next-level-condition" || c.lemma == "next-level-containment") failed = failed || !c.holds;
  }
  EXPECT_TRUE(failed);
}

TEST(Embedding, N1) {
  const auto r = build_embedding(build_table(1));
  EXPECT_TRUE(r.embedding_verified());
  EXPECT_TRUE(r.carriers_agree);
  EXPECT_EQ(r.source_size, 7U);
  EXPECT_EQ(r.full_source_size, 14U);
  EXPECT_TRUE(r.full_homomorphism);
  EXPECT_FALSE(r.full_injective);
  EXPECT_TRUE(r.lower_bounded);
  EXPECT_EQ(r.image.front(), std::make_pair(Mask{1} << 0b11, Mask{0}));
}

TEST(Embedding, N2) {
  const auto r = build_embedding(build_table(2));
  EXPECT_EQ(r.ground_size, 10U);
  EXPECT_TRUE(r.embedding_verified()) << (r.defect ? r.defect->detail : "");
  EXPECT_TRUE(r.carriers_agree);
  EXPECT_EQ(r.source_size, 61U);
  // Four collinear points of X on each edge of the base simplex give a D-cycle.
  EXPECT_FALSE(r.lower_bounded);
  ASSERT_TRUE(r.d_cycle.has_value());
}

TEST(Embedding, N3NeedsResourceFlag) { EXPECT_THROW(build_embedding(build_table(3)), ResourceError); }
