#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvxlat/closure.hpp"
#include "cvxlat/lattice.hpp"

namespace cvxlat {

enum class WitnessKind {
  sdv_violation,
  anti_exchange_violation,
  d_cycle,
  biatomicity_violation,
  weak_atom_violation,
  m3_sublattice,
  embedding_defect,
};

std::string to_string(WitnessKind kind);

/// Elements of a lattice (or ground indices, for anti-exchange) with their roles.
struct Witness {
  WitnessKind kind;
  std::vector<std::pair<std::string, std::size_t>> elements;
  std::string detail;

  std::size_t at(const std::string& role) const;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;
};

/// x ∨ y = x ∨ z ⇒ x ∨ y = x ∨ (y ∧ z). O(n^2): for each x, the meet of all y
/// with a common value of x ∨ y is kept and must keep that value; parallel over x.
CheckResult check_jsd(const FiniteLattice& l);
/// Serial reference: all triples.
CheckResult check_jsd_reference(const FiniteLattice& l);

CheckResult check_weak_atom_property(const FiniteLattice& l);

/// Anti-exchange on the closed sets of a set lattice (closures of A ∪ {y} are A ∨ cl({y})).
CheckResult check_anti_exchange(const FiniteLattice& closed_sets);
CheckResult check_anti_exchange(const FiniteGround& x, std::size_t max_ground = FiniteGround::kDefaultMaxGround);
CheckResult check_anti_exchange(const ClosureOperator& op);

/// Edges (a, b) of the join dependency relation among join-irreducibles.
std::vector<std::pair<std::size_t, std::size_t>> d_relation(const FiniteLattice& l);
/// Lower bounded iff the D-relation has no cycle; the witness lists a cycle.
CheckResult check_lower_bounded(const FiniteLattice& l);

/// For atoms x and nonzero y, z: x <= y ∨ z ⇒ x <= y' ∨ z' for atoms y' <= y, z' <= z.
CheckResult check_biatomic(const FiniteLattice& l);

std::optional<Witness> find_m3(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);

struct LatticeMap {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<std::size_t> image;
};

/// Injective, meet- and join-preserving.
CheckResult verify_embedding(const LatticeMap& f);
/// Meet- and join-preserving (no injectivity).
CheckResult verify_homomorphism(const LatticeMap& f);

/// Re-evaluates the defining condition on the witness elements.
bool revalidate(const FiniteLattice& l, const Witness& w);
bool revalidate(const LatticeMap& f, const Witness& w);

}  // namespace cvxlat
