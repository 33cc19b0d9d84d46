#include <cstdio>
#include <cstdlib>
#include <string>

#include "cvxlat/verify/acceptance.hpp"

int main(int argc, char** argv) {
  cvxlat::verify::AcceptanceOptions opt;
  opt.fixture_dir = CVXLAT_FIXTURE_DIR;
  for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
  bool all = true;
  cvxlat::verify::run_acceptance(opt, [&](const cvxlat::verify::CriterionResult& r) {
    std::printf("%s\n", cvxlat::verify::format_line(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
