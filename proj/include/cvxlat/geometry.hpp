#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvxlat/rational.hpp"

namespace cvxlat {

/// A point of Q^n.
class QPoint {
 public:
  QPoint() = default;
  explicit QPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  QPoint(std::initializer_list<Rat> coords) : coords_(coords) {}

  static QPoint zero(std::size_t dim) { return QPoint(std::vector<Rat>(dim)); }
  static QPoint unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  QPoint& operator+=(const QPoint& other);
  QPoint& operator-=(const QPoint& other);
  QPoint& operator*=(const Rat& s);

  friend bool operator==(const QPoint& a, const QPoint& b) { return a.coords_ == b.coords_; }
  /// Lexicographic, shorter points first.
  friend bool operator<(const QPoint& a, const QPoint& b);

 private:
  std::vector<Rat> coords_;
};

QPoint operator+(QPoint a, const QPoint& b);
QPoint operator-(QPoint a, const QPoint& b);
QPoint operator*(const Rat& s, QPoint p);

/// a + t (b - a)
QPoint lerp(const QPoint& a, const QPoint& b, const Rat& t);
QPoint barycenter(std::span<const QPoint> pts);
/// center + ratio (p - center)
QPoint homothety(const QPoint& p, const QPoint& center, const Rat& ratio);
std::string to_string(const QPoint& p);

/// Throws InputError unless every point has dimension `dim`.
void require_dim(std::span<const QPoint> pts, std::size_t dim);

/// Segment with independent openness of each endpoint: [a,b], [a,b), (a,b], (a,b).
class Segment {
 public:
  Segment(QPoint a, QPoint b, bool a_closed = true, bool b_closed = true);

  const QPoint& a() const { return a_; }
  const QPoint& b() const { return b_; }
  bool a_closed() const { return a_closed_; }
  bool b_closed() const { return b_closed_; }
  std::size_t dim() const { return a_.dim(); }

  /// a + t (b - a)
  QPoint point_at(const Rat& t) const { return lerp(a_, b_, t); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  QPoint a_, b_;
  bool a_closed_, b_closed_;
};

/// Polytope given by its vertex list (its own extreme points, in a stable order).
class VPolytope {
 public:
  VPolytope() = default;

  /// Keeps the extreme points of `pts` in input order.
  static VPolytope from_points(std::vector<QPoint> pts);
  /// Trusts the caller that `vertices` are exactly the extreme points.
  static VPolytope from_vertices(std::vector<QPoint> vertices);

  const std::vector<QPoint>& vertices() const { return vertices_; }
  std::size_t dim_ambient() const { return dim_ambient_; }
  std::size_t dim_affine() const { return dim_affine_; }

 private:
  std::vector<QPoint> vertices_;
  std::size_t dim_ambient_ = 0;
  std::size_t dim_affine_ = 0;
};

/// A face of a polytope as the sorted indices of its vertices.
struct Face {
  std::vector<std::size_t> vertices;
  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

std::vector<QPoint> face_points(const VPolytope& p, const Face& f);

/// The relative interior of a face of a polytope (the whole polytope when `face` is empty).
struct OpenFaceGenerator {
  VPolytope polytope;
  std::optional<Face> face;
};

/// A finite family of convex generators: closed points, segments with
/// per-endpoint openness and relatively open faces of polytopes.
class MixedGenerators {
 public:
  explicit MixedGenerators(std::size_t dim) : dim_(dim) {}

  MixedGenerators& add_point(QPoint p);
  MixedGenerators& add_segment(Segment s);
  MixedGenerators& add_open_face(VPolytope p, std::optional<Face> face = std::nullopt);
  MixedGenerators& add_closed_polytope(const VPolytope& p);

  std::size_t dim() const { return dim_; }
  bool empty() const { return closed_points_.empty() && segments_.empty() && open_faces_.empty(); }
  const std::vector<QPoint>& closed_points() const { return closed_points_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<OpenFaceGenerator>& open_faces() const { return open_faces_; }

  /// Closed points plus one vertex list per relatively open piece; the hull of
  /// the union is unchanged by this rewriting.
  struct Normalized {
    std::vector<QPoint> closed;
    std::vector<std::vector<QPoint>> open;
  };
  Normalized normalized() const;
  /// Every generator replaced by its topological closure.
  MixedGenerators closed_relaxation() const;

 private:
  std::size_t dim_;
  std::vector<QPoint> closed_points_;
  std::vector<Segment> segments_;
  std::vector<OpenFaceGenerator> open_faces_;
};

/// Closed or half-open parameter interval; lo <= hi, and lo == hi only as a closed point.
struct Interval {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;

  bool is_point() const { return lo == hi; }
  bool contains(const Rat& t) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Possibly degenerate subsegment with openness flags (from == to for a point).
struct SegmentPiece {
  QPoint from, to;
  bool from_closed = true, to_closed = true;
};

/// q is a convex combination of pts (exact LP feasibility).
bool hull_member(const QPoint& q, std::span<const QPoint> pts);

/// q lies in the convex hull of the union of the generators.
bool strict_hull_member(const QPoint& q, const MixedGenerators& gens);

/// Points x of pts with x not in Co(pts \ {x}); duplicates collapse, input order is kept.
std::vector<QPoint> extreme_points(std::span<const QPoint> pts);

std::size_t affine_span_dim(std::span<const QPoint> pts);

/// All nonempty faces, including the vertices and the polytope itself.
/// Supported for affine dimension <= 4.
std::vector<Face> faces(const VPolytope& p);

/// Face test by the disjointness criterion Co(F) ∩ Co(V \ F) = ∅.
bool is_face(const VPolytope& p, const Face& f);

/// Parameters t with s.point_at(t) in the hull of the generators (respecting
/// the openness of s). The set is convex, so it is a single interval.
std::optional<Interval> segment_hull_interval(const Segment& s, const MixedGenerators& gens);
std::vector<SegmentPiece> segment_hull_intersection(const Segment& s, const MixedGenerators& gens);

/// Co(gens) meets the relative interior of Co(region).
bool hull_meets_relint(const MixedGenerators& gens, std::span<const QPoint> region);

bool polytopes_intersect(std::span<const QPoint> a, std::span<const QPoint> b);

/// inner ⊆ Co(outer), checked on the points of inner.
bool polytope_contains(std::span<const QPoint> outer, std::span<const QPoint> inner);

struct HalfSpace {
  std::vector<Rat> normal;
  Rat offset;
};

/// Affine hull equations (normal·x == offset) and facet inequalities (normal·x <= offset).
struct HRep {
  std::size_t dim = 0;
  std::vector<HalfSpace> equalities;
  std::vector<HalfSpace> inequalities;
};

/// H-representation of Co(pts); affine dimension <= 4.
HRep h_representation(std::span<const QPoint> pts);

/// The intersection of the hulls of `polys` is contained in the polyhedron `target`.
bool intersection_within(std::span<const std::vector<QPoint>> polys, const HRep& target);

/// Affine coordinates of q with respect to affinely independent `simplex`
/// vertices; nothing when q is off their affine hull.
std::optional<std::vector<Rat>> barycentric_coordinates(const QPoint& q, std::span<const QPoint> simplex);

}  // namespace cvxlat
