#include "cvxlat/lattice.hpp"

#include <algorithm>
#include <bit>

#include "cvxlat/errors.hpp"
#include "cvxlat/parallel.hpp"

namespace cvxlat {

namespace {

Mask full_mask(std::size_t universe) { return universe >= 64 ? ~Mask{0} : (Mask{1} << universe) - 1; }

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

bool subset_of(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> mask_members(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<std::size_t>& members) {
  Mask m = 0;
  for (const auto i : members) {
    if (i >= 64) throw InputError("element index above 63");
    m |= Mask{1} << i;
  }
  return m;
}

std::string mask_label(Mask m) {
  std::string s = "{";
  bool first = true;
  for (const auto i : mask_members(m)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

void FiniteLattice::init_order(std::size_t n) {
  if (n == 0) throw InputError("a lattice needs at least one element");
  if (n > kMaxElements) {
    throw ResourceError("lattice has " + std::to_string(n) + " elements, limit is " + std::to_string(kMaxElements));
  }
  n_ = n;
  words_ = (n + 63) / 64;
  up_.assign(n * words_, 0);
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> labels, const std::vector<std::pair<Index, Index>>& leq) {
  FiniteLattice l;
  const std::size_t n = labels.size();
  l.init_order(n);
  l.labels_ = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) l.set_leq(i, i);
  for (const auto& [a, b] : leq) {
    if (a >= n || b >= n) throw InputError("order pair refers to a missing element");
    l.set_leq(a, b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.leq(i, k)) continue;
      for (std::size_t w = 0; w < l.words_; ++w) l.up_[i * l.words_ + w] |= l.up_[k * l.words_ + w];
    }
  }
  std::vector<std::uint64_t> down(n * l.words_, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      if (a != b && l.leq(b, a)) throw InputError("order is not antisymmetric: " + l.labels_[a] + ", " + l.labels_[b]);
      down[b * l.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  // Least element of a bitset `bounds` with respect to `rows` (up-sets or down-sets).
  std::vector<std::uint64_t> bounds(l.words_);
  auto extremal = [&](const std::vector<std::uint64_t>& rows, const std::vector<std::uint64_t>& dual) -> std::optional<Index> {
    std::optional<Index> best;
    std::size_t best_size = 0;
    for (std::size_t w = 0; w < l.words_; ++w) {
      std::uint64_t bits = bounds[w];
      while (bits) {
        const Index c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto size = popcount_and(&dual[c * l.words_], &dual[c * l.words_], l.words_);
        if (!best || size < best_size) {
          best = c;
          best_size = size;
        }
      }
    }
    if (best && subset_of(bounds.data(), &rows[*best * l.words_], l.words_)) return best;
    return std::nullopt;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t w = 0; w < l.words_; ++w) bounds[w] = l.up_[a * l.words_ + w] & l.up_[b * l.words_ + w];
      // The join is the upper bound whose down-set is smallest; it must lie below all other upper bounds.
      const auto j = extremal(l.up_, down);
      for (std::size_t w = 0; w < l.words_; ++w) bounds[w] = down[a * l.words_ + w] & down[b * l.words_ + w];
      const auto m = extremal(down, l.up_);
      if (!j || !m) throw InputError("not a lattice: " + l.labels_[a] + " and " + l.labels_[b] + " lack a join or meet");
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint16_t>(*j);
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint16_t>(*m);
    }
  }
  l.finish();
  return l;
}

FiniteLattice FiniteLattice::from_sets(std::vector<Mask> sets, std::size_t universe,
                                       const std::function<Mask(Mask)>& closure) {
  FiniteLattice l;
  const std::size_t n = sets.size();
  l.init_order(n);
  if (universe > 64) throw InputError("set lattices are limited to 64 ground elements");
  l.universe_ = universe;
  const Mask full = full_mask(universe);
  for (std::size_t i = 0; i < n; ++i) {
    if (sets[i] & ~full) throw InputError("set " + mask_label(sets[i]) + " leaves the universe");
    if (!l.index_.emplace(sets[i], i).second) throw InputError("duplicate set " + mask_label(sets[i]));
  }
  l.sets_ = std::move(sets);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((l.sets_[a] & ~l.sets_[b]) == 0) l.set_leq(a, b);
    }
  }
  auto lookup = [&](Mask m, const char* what) {
    const auto it = l.index_.find(m);
    if (it == l.index_.end()) throw InputError(std::string("family is not closed under ") + what + ": " + mask_label(m));
    return static_cast<std::uint16_t>(it->second);
  };
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (n > 64)
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      try {
        const Mask u = l.sets_[a] | l.sets_[b];
        Mask j;
        if (closure) {
          j = closure(u);
        } else {
          j = full;
          bool any = false;
          for (const Mask s : l.sets_) {
            if ((u & ~s) == 0) {
              j &= s;
              any = true;
            }
          }
          if (!any) throw InputError("family has no member containing " + mask_label(u));
        }
        l.join_[a * n + b] = l.join_[b * n + a] = lookup(j, "joins");
        l.meet_[a * n + b] = l.meet_[b * n + a] = lookup(l.sets_[a] & l.sets_[b], "intersection");
      } catch (const InputError& e) {
#pragma omp critical(cvxlat_from_sets)
        {
          failed = true;
          failure = e.what();
        }
      }
    }
  }
  if (failed) throw InputError(failure);
  l.labels_.reserve(n);
  for (const Mask s : l.sets_) l.labels_.push_back(mask_label(s));
  l.finish();
  return l;
}

void FiniteLattice::finish() {
  std::vector<std::uint64_t> down(n_ * words_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (leq(a, b)) down[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  bool have_bottom = false, have_top = false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (popcount_and(&up_[i * words_], &up_[i * words_], words_) == n_) {
      bottom_ = i;
      have_bottom = true;
    }
    if (popcount_and(&down[i * words_], &down[i * words_], words_) == n_) {
      top_ = i;
      have_top = true;
    }
  }
  if (!have_bottom || !have_top) throw InputError("lattice lacks a bottom or top");
  lower_.assign(n_, {});
  upper_.assign(n_, {});
  for (std::size_t b = 0; b < n_; ++b) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == b || !leq(c, b)) continue;
      // c is covered by b when the interval [c, b] has two elements.
      if (popcount_and(&up_[c * words_], &down[b * words_], words_) == 2) {
        lower_[b].push_back(c);
        upper_[c].push_back(b);
      }
    }
  }
}

std::optional<FiniteLattice::Index> FiniteLattice::index_of(Mask m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<FiniteLattice::Index, FiniteLattice::Index>> FiniteLattice::covers() const {
  std::vector<std::pair<Index, Index>> out;
  for (std::size_t b = 0; b < n_; ++b) {
    for (const auto c : lower_[b]) out.emplace_back(c, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteLattice::Index> FiniteLattice::join_irreducibles() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (lower_[i].size() == 1) out.push_back(i);
  }
  return out;
}

TableClosure::TableClosure(std::size_t universe, std::vector<Mask> table) : universe_(universe), table_(std::move(table)) {
  if (universe > 20) throw ResourceError("closure tables are limited to 20 ground elements");
  if (table_.size() != (std::size_t{1} << universe)) throw InputError("closure table must have 2^universe entries");
  const Mask full = full_mask(universe);
  for (Mask y = 0; y < table_.size(); ++y) {
    const Mask c = table_[y];
    if (c & ~full) throw InputError("closure table entry leaves the universe");
    if ((y & ~c) != 0) throw InputError("closure table is not extensive at " + mask_label(y));
    if (table_[c] != c) throw InputError("closure table is not idempotent at " + mask_label(y));
  }
  for (Mask y = 0; y < table_.size(); ++y) {
    for (std::size_t i = 0; i < universe; ++i) {
      const Mask z = y | (Mask{1} << i);
      if ((table_[y] & ~table_[z]) != 0) throw InputError("closure table is not monotone at " + mask_label(y));
    }
  }
}

void next_closure_each(const ClosureOperator& op, const std::function<bool(Mask)>& visit) {
  const std::size_t n = op.universe();
  if (n > 64) throw InputError("closure operators are limited to 64 ground elements");
  Mask a = op.close(0);
  if (!visit(a)) return;
  // Lectic order with element 0 most significant: for i from the last element
  // down, try A_<i ∪ {i}; it is canonical iff it adds nothing below i.
  for (;;) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      const Mask bit = Mask{1} << k;
      const Mask below = bit - 1;
      if (a & bit) continue;
      const auto next = op.close_unless((a & below) | bit, below & ~a);
      if (next) {
        a = *next;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    if (!visit(a)) return;
  }
}

std::vector<Mask> next_closure_all(const ClosureOperator& op, std::size_t max_sets) {
  std::vector<Mask> out;
  bool overflow = false;
  next_closure_each(op, [&](Mask m) {
    if (out.size() == max_sets) {
      overflow = true;
      return false;
    }
    out.push_back(m);
    return true;
  });
  if (overflow) throw ResourceError("more than " + std::to_string(max_sets) + " closed sets");
  return out;
}

FiniteLattice closure_lattice(const ClosureOperator& op, std::size_t max_sets) {
  // The family is complete, so joins come from intersecting supersets and need no closure calls.
  return FiniteLattice::from_sets(next_closure_all(op, max_sets), op.universe());
}

}  // namespace cvxlat
