#pragma once

#include <string>
#include <vector>

#include "cvxlat/geometry.hpp"
#include "cvxlat/rational.hpp"

namespace cvxlat::testing {

inline Rat R(long p, long q = 1) { return make_rat(p, q); }

inline QPoint P(std::initializer_list<Rat> c) { return QPoint(c); }

// Example PM coordinates.
struct PmPoints {
  QPoint a{0, 2}, b{-1, 0}, c{1, 0}, p{R(-1, 4), R(1, 2)}, m{R(1, 4), R(1, 2)};
};

}  // namespace cvxlat::testing

#include "cvxlat/lattice.hpp"

namespace cvxlat::testing {

inline FiniteLattice m3() {
  return FiniteLattice::from_leq({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline FiniteLattice n5() {
  // 0 < a < b < 1, 0 < c < 1
  return FiniteLattice::from_leq({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

inline FiniteLattice chain(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    if (i) leq.emplace_back(i - 1, i);
  }
  return FiniteLattice::from_leq(labels, leq);
}

inline FiniteLattice boolean(std::size_t k) {
  std::vector<Mask> sets;
  for (Mask m = 0; m < (Mask{1} << k); ++m) sets.push_back(m);
  return FiniteLattice::from_sets(sets, k);
}

inline std::vector<QPoint> collinear(std::size_t k) {
  std::vector<QPoint> pts;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(QPoint{Rat(static_cast<long>(i)), Rat(2 * static_cast<long>(i))});
  return pts;
}

}  // namespace cvxlat::testing
