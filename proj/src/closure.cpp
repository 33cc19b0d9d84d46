#include "cvxlat/closure.hpp"

#include <algorithm>
#include <bit>

#include "cvxlat/errors.hpp"
#include "cvxlat/parallel.hpp"

namespace cvxlat {

FiniteGround::FiniteGround(std::vector<QPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("empty ground set");
  if (points_.size() > 64) throw ResourceError("ground sets are limited to 64 points");
  dim_ = points_[0].dim();
  require_dim(points_, dim_);
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("ground set contains " + to_string(*dup) + " twice");
}

std::vector<QPoint> FiniteGround::points_of(Mask m) const {
  std::vector<QPoint> out;
  for (const auto i : mask_members(m)) out.push_back(points_[i]);
  return out;
}

Mask FiniteGround::full() const { return points_.size() == 64 ? ~Mask{0} : (Mask{1} << points_.size()) - 1; }

std::optional<std::size_t> FiniteGround::index_of(const QPoint& p) const {
  const auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

namespace {

// Cheap cases that need no LP: at most one generator, or the query is Y itself.
bool trivially_closed(Mask y) { return std::popcount(y) <= 1; }

}  // namespace

Mask closure_serial(Mask y, const FiniteGround& x) {
  if (trivially_closed(y)) return y;
  const auto gens = x.points_of(y);
  Mask out = y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Mask bit = Mask{1} << i;
    if (!(y & bit) && hull_member(x.point(i), gens)) out |= bit;
  }
  return out;
}

Mask closure(Mask y, const FiniteGround& x) {
  if (trivially_closed(y)) return y;
  const auto gens = x.points_of(y);
  const auto candidates = mask_members(x.full() & ~y);
  std::vector<char> inside(candidates.size(), 0);
  const int n = static_cast<int>(candidates.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (n > 4)
  for (int k = 0; k < n; ++k) inside[k] = hull_member(x.point(candidates[k]), gens) ? 1 : 0;
  Mask out = y;
  for (int k = 0; k < n; ++k) {
    if (inside[k]) out |= Mask{1} << candidates[k];
  }
  return out;
}

Mask HullClosure::close(Mask y) const { return parallel_ ? closure(y, ground_) : closure_serial(y, ground_); }

std::optional<Mask> HullClosure::close_unless(Mask y, Mask forbidden) const {
  if (trivially_closed(y)) return (y & forbidden) ? std::nullopt : std::optional<Mask>(y);
  const auto gens = ground_.points_of(y);
  for (const auto i : mask_members(forbidden & ~y)) {
    if (hull_member(ground_.point(i), gens)) return std::nullopt;
  }
  if (y & forbidden) return std::nullopt;
  const Mask rest = ground_.full() & ~forbidden & ~y;
  Mask out = y;
  for (const auto i : mask_members(rest)) {
    if (hull_member(ground_.point(i), gens)) out |= Mask{1} << i;
  }
  return out;
}

FiniteLattice enumerate_closed_sets(const FiniteGround& x, std::size_t max_ground) {
  if (x.size() > max_ground) {
    throw ResourceError("ground set has " + std::to_string(x.size()) + " points, limit is " + std::to_string(max_ground));
  }
  return closure_lattice(HullClosure(x));
}

LatticeQueries lattice_queries(const FiniteLattice& l) { return {l.covers(), l.join_irreducibles(), l.atoms()}; }

}  // namespace cvxlat
