#include <gtest/gtest.h>

#include "cvxlat/errors.hpp"
#include "cvxlat/geometry.hpp"
#include "support.hpp"

using namespace cvxlat;
using cvxlat::testing::P;
using cvxlat::testing::R;

namespace {

std::vector<QPoint> unit_triangle() { return {P({0, 0}), P({1, 0}), P({0, 1})}; }

}  // namespace

TEST(HullMember, PointInItself) {
  std::vector<QPoint> pts{P({0, 0})};
  EXPECT_TRUE(hull_member(P({0, 0}), pts));
}

TEST(HullMember, TriangleInsideAndOutside) {
  const auto tri = unit_triangle();
  EXPECT_TRUE(hull_member(P({R(1, 2), R(1, 4)}), tri));
  EXPECT_FALSE(hull_member(P({1, 1}), tri));
  EXPECT_TRUE(hull_member(P({R(1, 2), R(1, 2)}), tri));
  EXPECT_FALSE(hull_member(P({R(1, 2), R(1, 2) + Rat(1, 1000000)}), tri));
}

TEST(HullMember, DimensionMismatchThrows) {
  const auto tri = unit_triangle();
  EXPECT_THROW(hull_member(P({0, 0, 0}), tri), InputError);
}

TEST(HullMember, LowerDimensionalHullInSpace) {
  std::vector<QPoint> seg{P({0, 0, 0}), P({2, 2, 2})};
  EXPECT_TRUE(hull_member(P({1, 1, 1}), seg));
  EXPECT_FALSE(hull_member(P({1, 1, R(3, 2)}), seg));
}

TEST(StrictHullMember, OpenSegmentEndpoints) {
  cvxlat::testing::PmPoints pm;
  MixedGenerators g(2);
  g.add_segment(Segment(pm.p, pm.a, false, false));
  EXPECT_FALSE(strict_hull_member(pm.a, g));
  EXPECT_FALSE(strict_hull_member(pm.p, g));
  EXPECT_TRUE(strict_hull_member(lerp(pm.p, pm.a, R(1, 2)), g));
}

TEST(StrictHullMember, ExamplePmHalfOpenSegment) {
  cvxlat::testing::PmPoints pm;
  MixedGenerators g(2);
  g.add_segment(Segment(pm.b, pm.c));
  g.add_segment(Segment(pm.p, pm.a, false, false));
  EXPECT_TRUE(strict_hull_member(pm.m, g));
  EXPECT_TRUE(strict_hull_member(lerp(pm.m, pm.a, R(999, 1000)), g));
  EXPECT_FALSE(strict_hull_member(pm.a, g));
  EXPECT_TRUE(strict_hull_member(pm.b, g));
}

TEST(StrictHullMember, OpenFaceUsesOnlyRelativeInterior) {
  const auto tri = VPolytope::from_vertices(unit_triangle());
  MixedGenerators g(2);
  g.add_open_face(tri);
  EXPECT_FALSE(strict_hull_member(P({R(1, 2), 0}), g));
  EXPECT_TRUE(strict_hull_member(P({R(1, 4), R(1, 4)}), g));
  MixedGenerators edge(2);
  edge.add_open_face(tri, Face{{0, 1}});
  EXPECT_TRUE(strict_hull_member(P({R(1, 2), 0}), edge));
  EXPECT_FALSE(strict_hull_member(P({0, 0}), edge));
  // Adding a closed vertex makes the half-open edge.
  edge.add_point(P({0, 0}));
  EXPECT_TRUE(strict_hull_member(P({0, 0}), edge));
  EXPECT_FALSE(strict_hull_member(P({1, 0}), edge));
}

TEST(StrictHullMember, ImpliesClosedRelaxation) {
  cvxlat::testing::PmPoints pm;
  MixedGenerators g(2);
  g.add_segment(Segment(pm.b, pm.c, false, true));
  g.add_segment(Segment(pm.p, pm.a, false, false));
  const auto relaxed = g.closed_relaxation();
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      const QPoint q{R(i - 4, 4), R(j, 4)};
      if (strict_hull_member(q, g)) EXPECT_TRUE(strict_hull_member(q, relaxed)) << to_string(q);
    }
  }
}

TEST(ExtremePoints, SpecExamples) {
  const auto tri = unit_triangle();
  EXPECT_EQ(extreme_points(tri), tri);
  std::vector<QPoint> line{P({1}), P({0}), P({3}), P({2})};
  EXPECT_EQ(extreme_points(line), (std::vector<QPoint>{P({0}), P({3})}));
  std::vector<QPoint> square{P({0, 0}), P({1, 0}), P({1, 1}), P({0, 1}), P({R(1, 2), R(1, 2)})};
  EXPECT_EQ(extreme_points(square).size(), 4u);
  for (const auto& p : square) EXPECT_TRUE(hull_member(p, extreme_points(square)));
}

TEST(ExtremePoints, DuplicatesCollapseAndOrderIsKept) {
  std::vector<QPoint> pts{P({1, 0}), P({0, 0}), P({1, 0}), P({0, 1})};
  EXPECT_EQ(extreme_points(pts), (std::vector<QPoint>{P({1, 0}), P({0, 0}), P({0, 1})}));
}

TEST(Faces, SegmentTriangleTetrahedron) {
  EXPECT_EQ(faces(VPolytope::from_points({P({0}), P({1})})).size(), 3u);
  EXPECT_EQ(faces(VPolytope::from_points(unit_triangle())).size(), 7u);
  const auto tet = VPolytope::from_points({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})});
  EXPECT_EQ(faces(tet).size(), 15u);
}

TEST(Faces, EmbeddedSquareAndCube) {
  const auto sq = VPolytope::from_points({P({0, 0, 5}), P({1, 0, 5}), P({1, 1, 5}), P({0, 1, 5})});
  EXPECT_EQ(sq.dim_affine(), 2u);
  EXPECT_EQ(faces(sq).size(), 9u);
  std::vector<QPoint> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(P({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  const auto fs = faces(VPolytope::from_points(cube));
  EXPECT_EQ(fs.size(), 8u + 12u + 6u + 1u);
}

TEST(Faces, ClosedUnderIntersectionAndPassFaceTest) {
  std::vector<QPoint> pent{P({0, 0}), P({2, 0}), P({3, 2}), P({1, 3}), P({-1, 2})};
  const auto poly = VPolytope::from_points(pent);
  const auto fs = faces(poly);
  EXPECT_EQ(fs.size(), 11u);
  for (const auto& f : fs) {
    EXPECT_TRUE(is_face(poly, f));
    for (const auto& g : fs) {
      Face meet;
      std::set_intersection(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end(),
                            std::back_inserter(meet.vertices));
      if (!meet.vertices.empty()) EXPECT_NE(std::find(fs.begin(), fs.end(), meet), fs.end());
    }
  }
  EXPECT_FALSE(is_face(poly, Face{{0, 2}}));
}

TEST(Faces, AboveFourDimensionsIsUnsupported) {
  std::vector<QPoint> simplex{QPoint::zero(5)};
  for (std::size_t i = 0; i < 5; ++i) simplex.push_back(QPoint::unit(5, i));
  EXPECT_THROW(faces(VPolytope::from_vertices(simplex)), UnsupportedError);
}

TEST(SegmentHullIntersection, SpecExamples) {
  cvxlat::testing::PmPoints pm;
  MixedGenerators far(2);
  far.add_point(P({5, 5}));
  far.add_point(P({6, 5}));
  EXPECT_TRUE(segment_hull_intersection(Segment(pm.b, pm.c), far).empty());

  MixedGenerators tri(2);
  tri.add_closed_polytope(VPolytope::from_points({pm.a, pm.b, pm.c}));
  const auto inside = segment_hull_intersection(Segment(pm.p, pm.m), tri);
  ASSERT_EQ(inside.size(), 1u);
  EXPECT_EQ(inside[0].from, pm.p);
  EXPECT_EQ(inside[0].to, pm.m);
  EXPECT_TRUE(inside[0].from_closed && inside[0].to_closed);

  MixedGenerators g(2);
  g.add_segment(Segment(pm.b, pm.c));
  g.add_segment(Segment(pm.p, pm.a, false, false));
  const auto iv = segment_hull_interval(Segment(pm.m, pm.a), g);
  ASSERT_TRUE(iv.has_value());
  EXPECT_EQ(*iv, (Interval{0, 1, true, false}));
}

TEST(SegmentHullIntersection, RespectsSegmentOpenness) {
  MixedGenerators g(1);
  g.add_point(P({0}));
  g.add_point(P({4}));
  const auto iv = segment_hull_interval(Segment(P({2}), P({6}), false, true), g);
  ASSERT_TRUE(iv.has_value());
  EXPECT_EQ(*iv, (Interval{0, R(1, 2), false, true}));
  // Touching only at an excluded endpoint gives nothing.
  EXPECT_FALSE(segment_hull_interval(Segment(P({4}), P({6}), false, true), g).has_value());
  // A single point.
  const auto pt = segment_hull_interval(Segment(P({4}), P({6})), g);
  ASSERT_TRUE(pt.has_value());
  EXPECT_TRUE(pt->is_point());
}

TEST(SegmentHullIntersection, PiecesAgreeWithPointwiseMembership) {
  cvxlat::testing::PmPoints pm;
  MixedGenerators g(2);
  g.add_segment(Segment(pm.b, pm.c, true, false));
  g.add_segment(Segment(pm.p, pm.a, false, false));
  const Segment s(P({-2, 1}), P({2, 1}), true, false);
  const auto iv = segment_hull_interval(s, g);
  ASSERT_TRUE(iv.has_value());
  for (int k = 0; k <= 50; ++k) {
    const Rat t(k, 50);
    const bool expected = !(t == 1) && strict_hull_member(s.point_at(t), g);
    EXPECT_EQ(iv->contains(t), expected) << t.get_str();
  }
}

TEST(AffineSpanDim, SpecExamples) {
  std::vector<QPoint> one{P({3, 4})};
  std::vector<QPoint> two{P({0, 0}), P({1, 1})};
  EXPECT_EQ(affine_span_dim(one), 0u);
  EXPECT_EQ(affine_span_dim(two), 1u);
  EXPECT_EQ(affine_span_dim(unit_triangle()), 2u);
}

TEST(Segment, DegenerateRejected) { EXPECT_THROW(Segment(P({1, 1}), P({1, 1})), InputError); }

TEST(HRepresentation, TriangleInPlaneOfSpace) {
  std::vector<QPoint> tri{P({0, 0, 1}), P({1, 0, 1}), P({0, 1, 1})};
  const auto h = h_representation(tri);
  EXPECT_EQ(h.equalities.size(), 1u);
  EXPECT_EQ(h.inequalities.size(), 3u);
  auto satisfies = [&](const QPoint& x) {
    auto dot = [&](const std::vector<Rat>& a) {
      Rat s;
      for (std::size_t i = 0; i < 3; ++i) s += a[i] * x[i];
      return s;
    };
    for (const auto& e : h.equalities) {
      if (dot(e.normal) != e.offset) return false;
    }
    for (const auto& f : h.inequalities) {
      if (dot(f.normal) > f.offset) return false;
    }
    return true;
  };
  EXPECT_TRUE(satisfies(P({R(1, 3), R(1, 3), 1})));
  EXPECT_FALSE(satisfies(P({R(2, 3), R(2, 3), 1})));
  EXPECT_FALSE(satisfies(P({R(1, 3), R(1, 3), 0})));
}

TEST(IntersectionWithin, SquaresMeetInCorner) {
  std::vector<std::vector<QPoint>> polys{{P({0, 0}), P({2, 0}), P({2, 2}), P({0, 2})},
                                         {P({1, 1}), P({3, 1}), P({3, 3}), P({1, 3})}};
  std::vector<QPoint> corner{P({1, 1}), P({2, 1}), P({2, 2}), P({1, 2})};
  EXPECT_TRUE(intersection_within(polys, h_representation(corner)));
  std::vector<QPoint> smaller{P({1, 1}), P({2, 1}), P({1, 2})};
  EXPECT_FALSE(intersection_within(polys, h_representation(smaller)));
}

TEST(HullMeetsRelint, EdgeVersusInterior) {
  const auto tri = unit_triangle();
  MixedGenerators edge(2);
  edge.add_point(P({0, 0}));
  edge.add_point(P({1, 0}));
  EXPECT_FALSE(hull_meets_relint(edge, tri));
  std::vector<QPoint> bottom{P({0, 0}), P({1, 0})};
  EXPECT_TRUE(hull_meets_relint(edge, bottom));
}

TEST(Barycentric, ExactCoordinates) {
  const auto tri = unit_triangle();
  const auto w = barycentric_coordinates(P({R(1, 2), R(1, 4)}), tri);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<Rat>{R(1, 4), R(1, 2), R(1, 4)}));
  std::vector<QPoint> seg{P({0, 0}), P({1, 0})};
  EXPECT_FALSE(barycentric_coordinates(P({0, 1}), seg).has_value());
}
