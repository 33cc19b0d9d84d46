#include <gtest/gtest.h>

#include <random>

#include "cvxlat/analysis.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/segment_ground.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;

namespace {

struct Pm {
  PmPoints pt;
  SegmentUnionGround x{{Segment(pt.b, pt.c), Segment(pt.p, pt.a), Segment(pt.m, pt.a)}};
  SubsegmentSet a = subsegment(x, 0, Interval{0, 1});
  SubsegmentSet b = subsegment(x, 1, Interval{0, 1, false, false});
  SubsegmentSet c = subsegment(x, 2, Interval{0, 1, false, false});
};

SegmentUnionGround three_lines() {
  return SegmentUnionGround({Segment(P({-2, 0}), P({2, 0})), Segment(P({0, -2}), P({0, 2})), Segment(P({-2, -2}), P({2, 2}))});
}

}  // namespace

TEST(SegmentGround, RejectsIdenticalCarriers) {
  EXPECT_THROW(SegmentUnionGround({Segment(P({0, 0}), P({1, 0})), Segment(P({1, 0}), P({0, 0}))}), InputError);
  EXPECT_THROW(SegmentUnionGround({Segment(P({0, 0}), P({1, 0})), Segment(P({0}), P({1}))}), InputError);
  EXPECT_THROW(SegmentUnionGround(std::vector<Segment>{}), InputError);
}

TEST(Intervals, NormalizeMerges) {
  const auto out = normalize_intervals({Interval{R(1, 2), 1, false, true}, Interval{0, R(1, 2), true, false},
                                        Interval{R(1, 2), R(1, 2)}, Interval{2, 2, true, false}});
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0], (Interval{0, 1, true, true}));
  EXPECT_FALSE(intersect(Interval{0, 1, true, false}, Interval{1, 2}).has_value());
}

TEST(SegClosure, Trivial) {
  const Pm pm;
  EXPECT_EQ(seg_closure(pm.x, pm.a), pm.a);
  EXPECT_TRUE(seg_closure(pm.x, empty_set(pm.x)).empty());
  EXPECT_EQ(seg_join(pm.x, pm.a, empty_set(pm.x)), pm.a);
}

TEST(SegClosure, SharedPointCanonical) {
  const Pm pm;
  // a lies on both slanted carriers.
  const auto apex = subsegment(pm.x, 1, Interval{1, 1});
  EXPECT_EQ(apex.pieces[2], (std::vector<Interval>{Interval{1, 1}}));
  EXPECT_TRUE(contains(pm.x, apex, pm.pt.a));
}

TEST(SegClosure, CollinearOverlap) {
  const SegmentUnionGround x({Segment(P({0, 0}), P({2, 0})), Segment(P({3, 0}), P({1, 0}))});
  const auto y = subsegment(x, 0, Interval{0, 1});
  EXPECT_EQ(y.pieces[1], (std::vector<Interval>{Interval{R(1, 2), 1}}));
  EXPECT_EQ(seg_closure(x, y), y);
}

TEST(ExamplePm, Joins) {
  const Pm pm;
  const auto ab = seg_join(pm.x, pm.a, pm.b);
  const auto ac = seg_join(pm.x, pm.a, pm.c);
  auto x_minus_a = whole(pm.x);
  x_minus_a.pieces[1] = {Interval{0, 1, true, false}};
  x_minus_a.pieces[2] = {Interval{0, 1, true, false}};
  EXPECT_EQ(ab, x_minus_a) << to_string(ab);
  EXPECT_EQ(ac, x_minus_a);
  EXPECT_TRUE(seg_meet(pm.x, pm.b, pm.c).empty());
  EXPECT_EQ(seg_join(pm.x, pm.a, seg_meet(pm.x, pm.b, pm.c)), pm.a);
}

TEST(ExamplePm, SdvViolation) {
  const Pm pm;
  const auto rep = sdv_spot_check(pm.x, {SdvTriple{pm.a, pm.b, pm.c}});
  EXPECT_FALSE(rep.holds);
  ASSERT_TRUE(rep.violation.has_value());
  EXPECT_EQ(rep.violation->b, pm.b);
}

TEST(ExamplePm, Conditions) {
  const Pm pm;
  const auto i = check_condition_disjoint(pm.x);
  EXPECT_FALSE(i.holds);
  EXPECT_EQ(i.offending, (std::vector<std::size_t>{1, 2}));
  const auto ii = check_condition_faces(pm.x, VPolytope::from_points({pm.pt.a, pm.pt.b, pm.pt.c}));
  EXPECT_FALSE(ii.holds);
  EXPECT_EQ(ii.offending, (std::vector<std::size_t>{1}));
  const auto ex = extreme_points_of_closure(pm.x);
  EXPECT_EQ(ex.size(), 3U);
}

TEST(Conditions, Positive) {
  const SegmentUnionGround parallel({Segment(P({0, 0}), P({1, 0})), Segment(P({0, 1}), P({1, 1}))});
  EXPECT_TRUE(check_condition_disjoint(parallel).holds);
  const auto tri = VPolytope::from_points({P({0, 0}), P({4, 0}), P({0, 4})});
  const SegmentUnionGround edges({Segment(P({0, 0}), P({4, 0})), Segment(P({4, 0}), P({0, 4})), Segment(P({0, 4}), P({0, 0}))});
  EXPECT_TRUE(check_condition_faces(edges, tri).holds);
  EXPECT_FALSE(check_condition_disjoint(edges).holds);
  const auto square = VPolytope::from_points({P({0, 0}), P({1, 0}), P({1, 1}), P({0, 1})});
  const SegmentUnionGround crossing({Segment(P({0, 0}), P({1, 1}))});
  EXPECT_FALSE(check_condition_faces(crossing, square).holds);
}

TEST(ExtremePoints, Cases) {
  const SegmentUnionGround one({Segment(P({0, 0}), P({1, 2}), false, true)});
  EXPECT_EQ(extreme_points_of_closure(one).size(), 2U);
  const SegmentUnionGround diag({Segment(P({0, 0}), P({1, 1})), Segment(P({1, 0}), P({0, 1}))});
  EXPECT_EQ(extreme_points_of_closure(diag).size(), 4U);
}

TEST(Sdv, SingleSegmentRandom) {
  const SegmentUnionGround x({Segment(P({0, 0}), P({3, 1}))});
  const auto rep = sdv_spot_check(x, 200, 7);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.checked, 200U);
  EXPECT_GT(rep.premises, 0U);
}

TEST(Sdv, DisjointClosuresRandom) {
  const SegmentUnionGround x({Segment(P({0, 0}), P({2, 0})), Segment(P({0, 1}), P({1, 3}), false, true),
                              Segment(P({3, 1}), P({3, 2}), true, false)});
  ASSERT_TRUE(check_condition_disjoint(x).holds);
  EXPECT_TRUE(sdv_spot_check(x, 200, 11).holds);
}

TEST(Sdv, ParallelMatchesSerial) {
  const Pm pm;
  std::mt19937_64 rng(5);
  std::vector<SdvTriple> triples{{pm.a, pm.b, pm.c}};
  for (int i = 0; i < 30; ++i) triples.push_back({random_closed_set(pm.x, rng), random_closed_set(pm.x, rng), random_closed_set(pm.x, rng)});
  const auto par = sdv_spot_check(pm.x, triples);
  const auto ser = sdv_spot_check_serial(pm.x, triples);
  EXPECT_EQ(par.holds, ser.holds);
  EXPECT_EQ(par.premises, ser.premises);
}

TEST(ThreeLinesBounded, Outcome) {
  const auto x = three_lines();
  EXPECT_FALSE(check_condition_disjoint(x).holds);
  const auto a = subsegment(x, 0, Interval{0, 1}), b = subsegment(x, 1, Interval{0, 1}), c = subsegment(x, 2, Interval{0, 1});
  // Bounded carriers: A ∨ B cuts C to its middle half, so A ∨ B != A ∨ C.
  const auto ab = seg_join(x, a, b);
  EXPECT_EQ(ab.pieces[2], (std::vector<Interval>{Interval{R(1, 4), R(3, 4)}}));
  EXPECT_NE(ab, seg_join(x, a, c));
  EXPECT_TRUE(sdv_spot_check(x, {SdvTriple{a, b, c}}).holds);
  EXPECT_TRUE(sdv_spot_check(x, 200, 3).holds);
}

TEST(SegClosure, Properties) {
  const Pm pm;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_closed_set(pm.x, rng), b = random_closed_set(pm.x, rng);
    EXPECT_TRUE(is_closed(pm.x, a));
    EXPECT_EQ(seg_closure(pm.x, a), a);
    const auto j = seg_join(pm.x, a, b);
    EXPECT_TRUE(is_subset(pm.x, a, j));
    EXPECT_EQ(seg_meet(pm.x, a, j), a);
    EXPECT_EQ(seg_join(pm.x, a, seg_meet(pm.x, a, b)), a);
    // Monotone on the nested pair a ∧ b ⊆ a.
    EXPECT_TRUE(is_subset(pm.x, seg_closure(pm.x, seg_meet(pm.x, a, b)), seg_closure(pm.x, a)));
  }
}

TEST(FiniteSubsets, JoinSemidistributive) {
  const Pm pm;
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> q(0, 8);
  for (int round = 0; round < 5; ++round) {
    std::vector<QPoint> pts;
    for (std::size_t k = 0; k < pm.x.size() && pts.size() < 7; ++k) {
      for (int j = 0; j < 2; ++j) {
        const auto p = pm.x.segment(k).point_at(make_rat(q(rng), 8));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
      }
    }
    const auto l = enumerate_closed_sets(FiniteGround(pts));
    EXPECT_TRUE(check_jsd(l).holds);
  }
}

TEST(FaceRestriction, Finite) {
  const auto tri = VPolytope::from_points({P({0, 0}), P({4, 0}), P({0, 4})});
  const Face edge{{0, 1}};
  const std::vector<QPoint> y{P({1, 0}), P({3, 0}), P({1, 1}), P({0, 2})};
  EXPECT_TRUE(face_restriction_check(y, tri, edge).holds);
  const std::vector<QPoint> on_edge{P({1, 0}), P({2, 0})};
  EXPECT_TRUE(face_restriction_check(on_edge, tri, edge).holds);
  const std::vector<QPoint> outside{P({5, 5})};
  EXPECT_THROW(face_restriction_check(outside, tri, edge), InputError);
}

TEST(FaceRestriction, EmptyFaceRejected) {
  const auto tri = VPolytope::from_points({P({0, 0}), P({4, 0}), P({0, 4})});
  EXPECT_THROW(face_restriction_check(std::vector<QPoint>{P({1, 1})}, tri, Face{{}}), InputError);
}

TEST(FaceRestriction, Subsegments) {
  const auto tri = VPolytope::from_points({P({0, 0}), P({4, 0}), P({0, 4})});
  const SegmentUnionGround x({Segment(P({0, 0}), P({4, 0})), Segment(P({1, 0}), P({1, 2})), Segment(P({0, 4}), P({2, 1}), true, false)});
  const auto y = seg_union(x, subsegment(x, 1, Interval{0, 1, false, true}), subsegment(x, 2, Interval{0, 1, true, false}));
  EXPECT_TRUE(face_restriction_check(x, y, tri, Face{{0, 1}}).holds);
  EXPECT_TRUE(face_restriction_check(x, y, tri, Face{{0, 2}}).holds);
}

TEST(FaceHom, Square) {
  const auto sq = VPolytope::from_points({P({0, 0}), P({2, 0}), P({2, 2}), P({0, 2})});
  const FiniteGround x({P({0, 0}), P({1, 0}), P({2, 0}), P({1, 1}), P({2, 2}), P({0, 1})});
  const auto rep = face_homomorphism_check(x, sq, Face{{0, 1}});
  EXPECT_TRUE(rep.holds()) << rep.detail;
  EXPECT_EQ(rep.target_size, 7U);
}
