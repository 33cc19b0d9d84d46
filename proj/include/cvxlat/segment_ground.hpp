#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cvxlat/closure.hpp"
#include "cvxlat/geometry.hpp"

namespace cvxlat {

/// X as a finite union of segments (the carriers). Carriers may share points.
class SegmentUnionGround {
 public:
  /// Throws InputError on an empty list, mixed dimensions or two carriers with
  /// the same point set.
  explicit SegmentUnionGround(std::vector<Segment> segments);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return segments_.size(); }
  const Segment& segment(std::size_t k) const { return segments_[k]; }
  const std::vector<Segment>& segments() const { return segments_; }
  /// The parameter domain of carrier k: [0,1] with its openness.
  Interval domain(std::size_t k) const;
  bool contains(const QPoint& q) const;

 private:
  std::vector<Segment> segments_;
  std::size_t dim_ = 0;
};

/// A subset of a segment ground: per carrier, sorted pairwise disjoint
/// parameter intervals. Canonical sets list every point on every carrier
/// through it, so equality of canonical sets is point-set equality.
struct SubsegmentSet {
  std::vector<std::vector<Interval>> pieces;

  bool empty() const;
  friend bool operator==(const SubsegmentSet&, const SubsegmentSet&) = default;
};

SubsegmentSet empty_set(const SegmentUnionGround& x);
SubsegmentSet whole(const SegmentUnionGround& x);
/// The single subsegment of carrier k over `iv` (clipped to its domain).
SubsegmentSet subsegment(const SegmentUnionGround& x, std::size_t carrier, const Interval& iv);
/// Subsegment of carrier k between two of its points, given by coordinates.
SubsegmentSet subsegment(const SegmentUnionGround& x, std::size_t carrier, const QPoint& from, const QPoint& to,
                         bool from_closed, bool to_closed);

/// Sorted disjoint union of intervals.
std::vector<Interval> normalize_intervals(std::vector<Interval> ivs);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

SubsegmentSet canonicalize(const SegmentUnionGround& x, const SubsegmentSet& y);
bool contains(const SegmentUnionGround& x, const SubsegmentSet& y, const QPoint& q);
/// The pieces as convex generators.
MixedGenerators generators(const SegmentUnionGround& x, const SubsegmentSet& y);

/// Co(Y) ∩ X.
SubsegmentSet seg_closure(const SegmentUnionGround& x, const SubsegmentSet& y);
SubsegmentSet seg_join(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b);
SubsegmentSet seg_meet(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b);
SubsegmentSet seg_union(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b);
bool is_closed(const SegmentUnionGround& x, const SubsegmentSet& y);
bool is_subset(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b);

/// Human-readable form, e.g. "0:[0,1] 1:[0,1)".
std::string to_string(const SubsegmentSet& y);

struct ConditionReport {
  bool holds = true;
  std::vector<std::size_t> offending;  ///< carrier indices
  std::string detail;
};

/// Pairwise disjoint closures of the carriers.
ConditionReport check_condition_disjoint(const SegmentUnionGround& x);
/// Every carrier inside a proper face of p (affine dimension of p <= 4).
ConditionReport check_condition_faces(const SegmentUnionGround& x, const VPolytope& p);

struct SdvTriple {
  SubsegmentSet a, b, c;
};

struct SdvReport {
  bool holds = true;
  std::size_t checked = 0;    ///< triples examined
  std::size_t premises = 0;   ///< triples with A ∨ B = A ∨ C
  std::optional<SdvTriple> violation;
};

/// Closed sets drawn from carriers and rational subintervals with denominators <= 4.
SubsegmentSet random_closed_set(const SegmentUnionGround& x, std::mt19937_64& rng);

/// Checks the implication on each triple (inputs are closed first). Triples run in parallel.
SdvReport sdv_spot_check(const SegmentUnionGround& x, const std::vector<SdvTriple>& triples);
SdvReport sdv_spot_check_serial(const SegmentUnionGround& x, const std::vector<SdvTriple>& triples);
/// `count` triples of seeded random closed sets.
SdvReport sdv_spot_check(const SegmentUnionGround& x, std::size_t count, std::uint64_t seed);

/// Extreme points of the closure of Co(X), among the carrier endpoints.
std::vector<QPoint> extreme_points_of_closure(const SegmentUnionGround& x);

struct FaceRestrictionReport {
  bool holds = true;
  std::string detail;
};

/// Co(Y) ∩ F = Co(Y ∩ F) for finite Y ⊆ P. Throws InputError when Y ⊄ P.
FaceRestrictionReport face_restriction_check(std::span<const QPoint> y, const VPolytope& p, const Face& f);
/// The same identity for a subsegment set, compared on the carriers and on
/// the edges of F. Throws InputError when a carrier leaves P.
FaceRestrictionReport face_restriction_check(const SegmentUnionGround& x, const SubsegmentSet& y, const VPolytope& p,
                                             const Face& f);

struct FaceHomReport {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  bool joins = true;
  bool meets = true;
  bool surjective = true;
  std::string detail;

  bool holds() const { return joins && meets && surjective; }
};

/// A ↦ A ∩ F from Co(R^n, X) onto Co(R^n, X ∩ F), for finite X ⊆ P.
FaceHomReport face_homomorphism_check(const FiniteGround& x, const VPolytope& p, const Face& f,
                                      std::size_t max_ground = FiniteGround::kDefaultMaxGround);

}  // namespace cvxlat
