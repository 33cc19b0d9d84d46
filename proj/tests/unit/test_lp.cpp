#include <gtest/gtest.h>

#include "cvxlat/lp.hpp"

using namespace cvxlat;

namespace {

// maximize x + y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6
LinearProgram small_lp() {
  LinearProgram lp(4);
  const auto r0 = lp.add_row(4);
  lp.set_coeff(r0, 0, 1);
  lp.set_coeff(r0, 1, 2);
  lp.set_coeff(r0, 2, 1);
  const auto r1 = lp.add_row(6);
  lp.set_coeff(r1, 0, 3);
  lp.set_coeff(r1, 1, 1);
  lp.set_coeff(r1, 3, 1);
  lp.set_objective(0, 1);
  lp.set_objective(1, 1);
  return lp;
}

}  // namespace

TEST(LinearProgram, OptimumIsExact) {
  const auto sol = small_lp().maximize();
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.objective, Rat(14, 5));
  EXPECT_EQ(sol.values[0], Rat(8, 5));
  EXPECT_EQ(sol.values[1], Rat(6, 5));
}

TEST(LinearProgram, Infeasible) {
  LinearProgram lp(1);
  const auto r = lp.add_row(-1);
  lp.set_coeff(r, 0, 1);
  EXPECT_FALSE(lp.feasible());
  EXPECT_EQ(lp.maximize().status, LpStatus::infeasible);
}

TEST(LinearProgram, Unbounded) {
  LinearProgram lp(2);
  const auto r = lp.add_row(1);
  lp.set_coeff(r, 0, 1);
  lp.set_coeff(r, 1, -1);
  lp.set_objective(0, 1);
  EXPECT_EQ(lp.maximize().status, LpStatus::unbounded);
}

TEST(LinearProgram, RedundantRowsAreTolerated) {
  LinearProgram lp(2);
  for (int k = 1; k <= 3; ++k) {
    const auto r = lp.add_row(k);
    lp.set_coeff(r, 0, k);
    lp.set_coeff(r, 1, k);
  }
  lp.set_objective(0, 1);
  const auto sol = lp.maximize();
  ASSERT_EQ(sol.status, LpStatus::optimal);
  EXPECT_EQ(sol.objective, 1);
}

TEST(StrictSystem, SharedSlackDetectsStrictFeasibility) {
  // x + y = 1 with x, y > 0
  LinearProgram lp(2);
  const auto r = lp.add_row(1);
  lp.set_coeff(r, 0, 1);
  lp.set_coeff(r, 1, 1);
  EXPECT_TRUE(StrictSystem(lp, {{{0, 1}, Strictness::required}}).feasible());
  lp.fix_zero(1);
  EXPECT_FALSE(StrictSystem(lp, {{{0, 1}, Strictness::required}}).feasible());
}

TEST(StrictSystem, OptionalGroupsAreSwitchedOff) {
  // x + y = 1, y = 0; group {x, y} can only be all zero, so x must be free.
  LinearProgram lp(3);
  const auto r = lp.add_row(1);
  lp.set_coeff(r, 0, 1);
  lp.set_coeff(r, 1, 1);
  lp.set_coeff(r, 2, 1);
  lp.fix_zero(1);
  const auto reduced = StrictSystem(lp, {{{0, 1}, Strictness::all_or_nothing}}).reduce();
  ASSERT_TRUE(reduced.has_value());
  auto probe = *reduced;
  probe.set_objective(0, 1);
  EXPECT_EQ(probe.maximize().objective, 0);
  probe.clear_objective();
  probe.set_objective(2, 1);
  EXPECT_EQ(probe.maximize().objective, 1);
}
