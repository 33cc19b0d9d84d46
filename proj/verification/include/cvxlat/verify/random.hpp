#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "cvxlat/geometry.hpp"

namespace cvxlat::verify {

/// `count` distinct points with coordinates k/den, |k| <= range.
std::vector<QPoint> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim, long range, long den = 1);

/// A convex combination of `vertices` with weights of denominator `den`.
QPoint random_in_hull(std::mt19937_64& rng, const std::vector<QPoint>& vertices, long den);

/// Vertices (i, i^2), i < k: convex position.
std::vector<QPoint> parabola_polygon(std::size_t k);

}  // namespace cvxlat::verify
