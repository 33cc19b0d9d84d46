#include "cvxlat/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvxlat {

LinearProgram::LinearProgram(std::size_t num_vars) : num_vars_(num_vars), objective_(num_vars) {}

std::size_t LinearProgram::add_var() {
  for (auto& row : rows_) row.emplace_back(0);
  objective_.emplace_back(0);
  return num_vars_++;
}

std::size_t LinearProgram::add_row(Rat rhs) {
  rows_.emplace_back(num_vars_);
  rhs_.push_back(std::move(rhs));
  return rows_.size() - 1;
}

void LinearProgram::set_coeff(std::size_t row, std::size_t var, const Rat& value) { rows_[row][var] = value; }

void LinearProgram::set_rhs(std::size_t row, const Rat& value) { rhs_[row] = value; }

void LinearProgram::fix_zero(std::size_t var) {
  const auto r = add_row(0);
  rows_[r][var] = 1;
}

void LinearProgram::set_objective(std::size_t var, const Rat& value) { objective_[var] = value; }

void LinearProgram::clear_objective() { std::fill(objective_.begin(), objective_.end(), Rat(0)); }

namespace {

// Dense tableau. Columns [0, n) are structural, [n, n + m) artificial, the
// last column is the right-hand side.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rat>>& rows, const std::vector<Rat>& rhs, std::size_t n)
      : m_(rows.size()), n_(n), width_(n + rows.size() + 1), cells_(m_ * width_), basis_(m_), active_(m_, true) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(rhs[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(rows[i][j]) != 0) at(i, j) = flip ? Rat(-rows[i][j]) : rows[i][j];
      }
      at(i, n_ + i) = 1;
      at(i, width_ - 1) = flip ? Rat(-rhs[i]) : rhs[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials. Returns false when infeasible.
  bool phase_one() {
    std::vector<Rat> cost(width_ - 1);
    for (std::size_t j = n_; j < n_ + m_; ++j) cost[j] = -1;
    load_objective(cost);
    run(n_ + m_);
    if (sgn(value_) < 0) return false;
    drive_out_artificials();
    return true;
  }

  // Phase 2 on the structural columns only.
  LpStatus phase_two(const std::vector<Rat>& objective) {
    std::vector<Rat> cost(width_ - 1);
    std::copy(objective.begin(), objective.end(), cost.begin());
    load_objective(cost);
    return run(n_) ? LpStatus::optimal : LpStatus::unbounded;
  }

  const Rat& value() const { return value_; }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = at(i, width_ - 1);
    }
    return x;
  }

 private:
  Rat& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  void load_objective(const std::vector<Rat>& cost) {
    reduced_.assign(width_ - 1, Rat(0));
    value_ = 0;
    for (std::size_t j = 0; j + 1 < width_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rat& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (sgn(at(i, j)) != 0) reduced_[j] -= cb * at(i, j);
      }
      value_ += cb * at(i, width_ - 1);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rat inv = 1 / at(r, e);
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || !active_[i] || sgn(at(i, e)) == 0) continue;
      const Rat f = at(i, e);
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
      }
    }
    if (sgn(reduced_[e]) != 0) {
      const Rat f = reduced_[e];
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (sgn(at(r, j)) != 0) reduced_[j] -= f * at(r, j);
      }
      value_ += f * at(r, width_ - 1);
    }
    basis_[r] = e;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sgn(at(i, enter)) <= 0) continue;
        Rat ratio = at(i, width_ - 1) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == n_) {
        active_[i] = false;  // redundant row
      } else {
        pivot(i, col);
      }
    }
  }

  std::size_t m_, n_, width_;
  std::vector<Rat> cells_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::vector<Rat> reduced_;
  Rat value_;
};

}  // namespace

bool LinearProgram::feasible() const {
  Tableau t(rows_, rhs_, num_vars_);
  return t.phase_one();
}

LpSolution LinearProgram::maximize() const {
  Tableau t(rows_, rhs_, num_vars_);
  LpSolution out;
  if (!t.phase_one()) {
    out.status = LpStatus::infeasible;
    return out;
  }
  out.status = t.phase_two(objective_);
  if (out.status == LpStatus::optimal) {
    out.objective = t.value();
    out.values = t.solution();
  }
  return out;
}

StrictSystem::StrictSystem(LinearProgram closed, std::vector<StrictGroup> groups)
    : closed_(std::move(closed)), groups_(std::move(groups)) {}

namespace {

// Variables among `candidates` that are positive at some feasible point of `lp`.
std::vector<bool> positive_support(const LinearProgram& lp, const std::vector<std::size_t>& candidates) {
  std::vector<bool> positive(lp.num_vars(), false);
  std::vector<std::size_t> open = candidates;
  while (!open.empty()) {
    LinearProgram probe = lp;
    probe.clear_objective();
    for (const auto v : open) {
      // y <= x_v and y <= 1 keep the objective bounded.
      const auto y = probe.add_var();
      const auto a = probe.add_var();
      const auto b = probe.add_var();
      const auto r1 = probe.add_row(0);
      probe.set_coeff(r1, v, 1);
      probe.set_coeff(r1, y, -1);
      probe.set_coeff(r1, a, -1);
      const auto r2 = probe.add_row(1);
      probe.set_coeff(r2, y, 1);
      probe.set_coeff(r2, b, 1);
      probe.set_objective(y, 1);
    }
    const auto sol = probe.maximize();
    if (sol.status != LpStatus::optimal || sgn(sol.objective) == 0) break;
    std::vector<std::size_t> rest;
    for (const auto v : open) {
      if (sgn(sol.values[v]) > 0) {
        positive[v] = true;
      } else {
        rest.push_back(v);
      }
    }
    open.swap(rest);
  }
  return positive;
}

}  // namespace

std::optional<LinearProgram> StrictSystem::reduce() const {
  std::vector<bool> zeroed(groups_.size(), false);
  for (;;) {
    LinearProgram lp = closed_;
    std::vector<std::size_t> active;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (const auto v : groups_[g].vars) {
        if (zeroed[g]) {
          lp.fix_zero(v);
        } else {
          active.push_back(v);
        }
      }
    }
    if (!lp.feasible()) return std::nullopt;
    if (active.empty()) return lp;

    LinearProgram slack = lp;
    slack.clear_objective();
    const auto s = slack.add_var();
    for (const auto v : active) {
      const auto w = slack.add_var();
      const auto r = slack.add_row(0);
      slack.set_coeff(r, v, 1);
      slack.set_coeff(r, s, -1);
      slack.set_coeff(r, w, -1);
    }
    const auto u = slack.add_var();
    const auto cap = slack.add_row(1);
    slack.set_coeff(cap, s, 1);
    slack.set_coeff(cap, u, 1);
    slack.set_objective(s, 1);
    const auto best = slack.maximize();
    if (best.status == LpStatus::optimal && sgn(best.objective) > 0) return lp;

    const auto positive = positive_support(lp, active);
    bool changed = false;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (zeroed[g]) continue;
      const bool all_positive =
          std::all_of(groups_[g].vars.begin(), groups_[g].vars.end(), [&](std::size_t v) { return positive[v]; });
      if (all_positive) continue;
      if (groups_[g].kind == Strictness::required) return std::nullopt;
      zeroed[g] = true;
      changed = true;
    }
    if (!changed) throw std::logic_error("strict system: slack is zero although every group can be positive");
  }
}

}  // namespace cvxlat
