#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cvxlat {

/// Characteristic vector over a ground set of at most 64 elements.
using Mask = std::uint64_t;

std::vector<std::size_t> mask_members(Mask m);
Mask mask_of(const std::vector<std::size_t>& members);
std::string mask_label(Mask m);

/// A finite lattice with precomputed order, join/meet tables and covers.
/// Elements are plain indices; lattices built from closed sets also keep the sets.
class FiniteLattice {
 public:
  using Index = std::size_t;
  static constexpr std::size_t kMaxElements = 4096;

  /// `leq` lists pairs (i, j) with i <= j; the reflexive-transitive closure is taken.
  /// Throws InputError when the result is not a lattice.
  static FiniteLattice from_leq(std::vector<std::string> labels, const std::vector<std::pair<Index, Index>>& leq);

  /// Lattice of an intersection-closed family ordered by inclusion. Joins use
  /// `closure(a | b)` when given, otherwise the least member containing a | b.
  static FiniteLattice from_sets(std::vector<Mask> sets, std::size_t universe,
                                 const std::function<Mask(Mask)>& closure = {});

  std::size_t size() const { return n_; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

  bool leq(Index a, Index b) const { return (up_[a * words_ + b / 64] >> (b % 64)) & 1U; }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  Index join(Index a, Index b) const { return join_[a * n_ + b]; }
  Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }

  const std::string& label(Index i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_sets() const { return !sets_.empty() || n_ == 0; }
  Mask set(Index i) const { return sets_[i]; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t universe() const { return universe_; }
  std::optional<Index> index_of(Mask m) const;

  const std::vector<Index>& lower_covers(Index i) const { return lower_[i]; }
  const std::vector<Index>& upper_covers(Index i) const { return upper_[i]; }
  /// All cover pairs (lower, upper), sorted.
  std::vector<std::pair<Index, Index>> covers() const;
  std::vector<Index> join_irreducibles() const;
  std::vector<Index> atoms() const { return upper_[bottom_]; }
  bool is_join_irreducible(Index i) const { return lower_[i].size() == 1; }

 private:
  FiniteLattice() = default;
  void init_order(std::size_t n);
  void set_leq(Index a, Index b) { up_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }
  void finish();  // bottom, top, covers

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;  // row a: bitset of {b : a <= b}
  std::vector<std::uint16_t> join_, meet_;
  std::vector<std::string> labels_;
  std::vector<Mask> sets_;
  std::unordered_map<Mask, Index> index_;
  std::size_t universe_ = 0;
  Index bottom_ = 0, top_ = 0;
  std::vector<std::vector<Index>> lower_, upper_;
};

/// A closure operator on a ground set of at most 64 elements.
class ClosureOperator {
 public:
  virtual ~ClosureOperator() = default;
  virtual std::size_t universe() const = 0;
  virtual Mask close(Mask y) const = 0;
  /// close(y), or nothing as soon as it is known to meet `forbidden`.
  virtual std::optional<Mask> close_unless(Mask y, Mask forbidden) const {
    const Mask c = close(y);
    if (c & forbidden) return std::nullopt;
    return c;
  }
};

/// Closure operator given by an explicit table indexed by the input mask.
class TableClosure : public ClosureOperator {
 public:
  /// Throws InputError unless the table has 2^universe entries and is a closure operator.
  TableClosure(std::size_t universe, std::vector<Mask> table);
  std::size_t universe() const override { return universe_; }
  Mask close(Mask y) const override { return table_[y]; }

 private:
  std::size_t universe_;
  std::vector<Mask> table_;
};

/// All closed sets of `op` in lectic order (NextClosure).
/// Throws ResourceError when more than `max_sets` closed sets exist.
std::vector<Mask> next_closure_all(const ClosureOperator& op, std::size_t max_sets = FiniteLattice::kMaxElements);

/// Iterates the closed sets of `op` in lectic order without storing them.
/// The callback returns false to stop.
void next_closure_each(const ClosureOperator& op, const std::function<bool(Mask)>& visit);

/// Lattice of the closed sets of `op`.
FiniteLattice closure_lattice(const ClosureOperator& op, std::size_t max_sets = FiniteLattice::kMaxElements);

}  // namespace cvxlat
