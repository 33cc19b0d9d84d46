#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cvxlat/geometry.hpp"
#include "cvxlat/lattice.hpp"

namespace cvxlat {

/// Finite ground set X: pairwise distinct points of a common dimension.
class FiniteGround {
 public:
  static constexpr std::size_t kDefaultMaxGround = 20;

  explicit FiniteGround(std::vector<QPoint> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const QPoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<QPoint>& points() const { return points_; }
  std::vector<QPoint> points_of(Mask m) const;
  Mask full() const;
  std::optional<std::size_t> index_of(const QPoint& p) const;

 private:
  std::vector<QPoint> points_;
  std::size_t dim_ = 0;
};

/// {x ∈ X : x ∈ Co(Y)}; candidates are tested in parallel.
Mask closure(Mask y, const FiniteGround& x);
/// Serial reference implementation of `closure`.
Mask closure_serial(Mask y, const FiniteGround& x);

/// Y ↦ Co(Y) ∩ X as a closure operator.
class HullClosure : public ClosureOperator {
 public:
  explicit HullClosure(const FiniteGround& ground, bool parallel = true) : ground_(ground), parallel_(parallel) {}
  std::size_t universe() const override { return ground_.size(); }
  Mask close(Mask y) const override;
  /// Tests the forbidden points first and stops at the first one inside the hull.
  std::optional<Mask> close_unless(Mask y, Mask forbidden) const override;

 private:
  const FiniteGround& ground_;
  bool parallel_;
};

/// The lattice Co(R^n, X). Throws ResourceError when |X| > max_ground.
FiniteLattice enumerate_closed_sets(const FiniteGround& x, std::size_t max_ground = FiniteGround::kDefaultMaxGround);

struct LatticeQueries {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> join_irreducibles;
  std::vector<std::size_t> atoms;
};

LatticeQueries lattice_queries(const FiniteLattice& l);

}  // namespace cvxlat
