#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cvxlat/rational.hpp"

namespace cvxlat::linalg {

using Matrix = std::vector<std::vector<Rat>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Rat>> nullspace(Matrix m, std::size_t cols);

/// The unique solution of a x = b, or nothing when the system is
/// inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve_unique(const Matrix& a, const std::vector<Rat>& b);

}  // namespace cvxlat::linalg
