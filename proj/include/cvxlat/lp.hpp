#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cvxlat/rational.hpp"

namespace cvxlat {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat objective;
  std::vector<Rat> values;
};

/// Linear program in equality standard form:
///   maximize c·x  subject to  A x = b,  x >= 0.
/// Solved exactly by a two-phase tableau simplex with Bland's rule.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars = 0);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }

  /// Appends a variable with zero coefficient in every existing row; returns its index.
  std::size_t add_var();

  /// Appends an all-zero row with the given right-hand side; returns its index.
  std::size_t add_row(Rat rhs = 0);
  void set_coeff(std::size_t row, std::size_t var, const Rat& value);
  void set_rhs(std::size_t row, const Rat& value);
  const Rat& coeff(std::size_t row, std::size_t var) const { return rows_[row][var]; }

  /// Adds the row x_var = 0.
  void fix_zero(std::size_t var);

  void set_objective(std::size_t var, const Rat& value);
  void clear_objective();

  /// Phase 1 only.
  bool feasible() const;
  LpSolution maximize() const;

 private:
  std::size_t num_vars_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<Rat> objective_;
};

/// How the variables of a group must behave in a strict solution.
enum class Strictness {
  all_or_nothing,  ///< either every variable of the group is 0 or every one is > 0
  required,        ///< every variable of the group is > 0
};

struct StrictGroup {
  std::vector<std::size_t> vars;
  Strictness kind = Strictness::all_or_nothing;
};

/// A closed LP together with strictness groups. The solution set of such a
/// system is convex but not closed; `reduce` returns the closed LP describing
/// its closure, or nothing when the system has no solution.
///
/// Each round maximizes a single slack shared by all active strict variables;
/// a positive optimum certifies strict feasibility. Otherwise the variables
/// that can be positive at all are computed and groups that are forced to
/// contain a zero are pinned to zero, which terminates after at most one round
/// per group.
class StrictSystem {
 public:
  StrictSystem(LinearProgram closed, std::vector<StrictGroup> groups);

  std::optional<LinearProgram> reduce() const;
  bool feasible() const { return reduce().has_value(); }

 private:
  LinearProgram closed_;
  std::vector<StrictGroup> groups_;
};

}  // namespace cvxlat
