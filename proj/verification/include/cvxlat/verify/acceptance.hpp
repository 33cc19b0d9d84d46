#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cvxlat::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  std::string fixture_dir;  ///< holds pm.json and four_collinear.json
  std::uint64_t seed = 0;
  std::vector<int> only;  ///< empty: every criterion
};

std::vector<int> criterion_ids();

/// Runs the criteria in order; `report` sees each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3  convex-position-boolean  (0.41 s)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace cvxlat::verify
