#pragma once

// Independent reference computations. None of them use the LP solver.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cvxlat/geometry.hpp"
#include "cvxlat/lattice.hpp"

namespace cvxlat::verify {

/// A certificate for q ∈ Y^(k): q is reached from a point of Y by k steps,
/// each along a segment to another point of Y. steps[j] = (from, to, t) with
/// from + t (to - from) the next point of the chain.
struct HullChain {
  std::vector<QPoint> support;  ///< affinely independent points of Y
  std::vector<QPoint> chain;    ///< z_0 = support[0], ..., z_k = q
};

/// Carathéodory search over affinely independent subsets of size <= dim + 1;
/// the chain is rebuilt and each step re-checked on its segment.
std::optional<HullChain> hull_chain(const QPoint& q, const std::vector<QPoint>& y);
bool hull_oracle(const QPoint& q, const std::vector<QPoint>& y);

/// Closed subsets of X by a scan over all 2^|X| masks, with precomputed
/// minimal witness sets per point. Sorted ascending.
std::vector<Mask> brute_closed_sets(const std::vector<QPoint>& x);

/// ∩-closed families of subsets of {0..n} by the literal pairwise filter (n <= 3).
std::size_t brute_subm_count(std::size_t n);

/// a D b over join-irreducibles, with every c < b tested (not only the lower cover).
std::vector<std::pair<std::size_t, std::size_t>> literal_d_relation(const FiniteLattice& l);
/// A cycle of the literal relation exists (Warshall closure).
bool literal_d_cycle(const FiniteLattice& l);

/// Nonempty faces of Co(v) for vertices in convex position, from facet
/// hyperplanes through affinely independent vertex tuples (determinant signs).
std::size_t brute_face_count(const std::vector<QPoint>& v);

}  // namespace cvxlat::verify
