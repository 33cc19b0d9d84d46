#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cvxlat/analysis.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/geometry.hpp"

namespace cvxlat {

/// p_0 = origin, p_i = e_i.
VPolytope base_simplex(std::size_t n);

/// Homothety of `s` about its barycenter with ratio t ∈ (0, 1].
VPolytope shrink(const VPolytope& s, const Rat& t);

/// The face S_A of the base simplex (vertices in ascending index order).
std::vector<QPoint> simplex_face(const VPolytope& simplex, Mask a);

/// [p_i, p_j] ∩ aff{p_k^t : k ∈ A \ {j}} with p_k^t the vertices of S_A shrunk by ratio t.
QPoint p_point(const VPolytope& simplex, std::size_t i, Mask a, std::size_t j, const Rat& t);

/// T(A,t,j) = Co{p_i, p(i,A,j) : i ∈ A, i ≠ j}
VPolytope t_polytope(const VPolytope& simplex, Mask a, const Rat& t, std::size_t j);
/// U(A,t,i) = Co({p_i} ∪ {p(i,A,j) : j ∈ A, j ≠ i})
VPolytope u_polytope(const VPolytope& simplex, Mask a, const Rat& t, std::size_t i);

/// Shrink amounts s_0 > s_1 > ... > s_n = 0 per level k (|A| = n + 1 - k); the
/// homothety ratio at level k is 1 - s_k.
struct ShrinkSchedule {
  std::size_t n = 0;
  std::vector<Rat> shrink;

  Rat ratio(std::size_t level) const { return 1 - shrink[level]; }
};

/// The containment condition behind the choice of the next level: for every A
/// with |A| = n + 1 - level > 2, i ∈ A and m ∈ A \ {i}, the vertex p_m of S_{A\{i}}
/// shrunk by `next` lies in U(A, 1 - shrink, m).
bool next_level_condition(const VPolytope& simplex, std::size_t level, const Rat& shrink, const Rat& next);

/// Halves from shrink/2 until next_level_condition holds; 64 attempts.
Rat epsilon_search(const VPolytope& simplex, std::size_t level, const Rat& shrink);

/// s_0 = 1/2, s_{k+1} = epsilon_search(s_k) for k < n - 1, s_n = 0.
ShrinkSchedule make_schedule(std::size_t n);

struct GroundLabel {
  bool center = false;  ///< the point v
  std::size_t i = 0;
  Mask a = 0;
  std::string text() const;
};

struct ConstructionTable {
  std::size_t n = 0;
  VPolytope simplex;
  ShrinkSchedule schedule;
  QPoint v;
  std::map<Mask, std::vector<QPoint>> shrunken;  ///< P_A for every nonempty A, vertices in ascending i

  std::size_t level(Mask a) const;
  Rat ratio(Mask a) const { return schedule.ratio(level(a)); }
  /// p(i, A) = p_i shrunk at the level of A.
  const QPoint& p(std::size_t i, Mask a) const;
  /// U(A, i) at the level of A.
  VPolytope u(Mask a, std::size_t i) const;
};

/// n ∈ {1, 2, 3}.
ConstructionTable build_table(std::size_t n);
ConstructionTable build_table(std::size_t n, ShrinkSchedule schedule);

/// X = {v} ∪ Ex P_A over nonempty proper A; v first, then A by decreasing size.
FiniteGround ground_set(const ConstructionTable& ct, std::vector<GroundLabel>* labels = nullptr);

struct LemmaCheck {
  std::string lemma;
  std::size_t cases = 0;
  bool holds = true;
  std::string offending;
};

/// Exact checks of the polytope lemmas at the construction's parameters.
std::vector<LemmaCheck> verify_lemmas(const ConstructionTable& ct);

struct EmbeddingReport {
  std::size_t n = 0;
  std::size_t ground_size = 0;
  std::size_t source_size = 0;       ///< families containing the top of B_{n+1}
  std::size_t full_source_size = 0;  ///< all of Sub∧(B_{n+1})
  std::size_t target_size = 0;
  bool injective = false;
  bool meet_preserving = false;
  bool join_preserving = false;
  bool full_homomorphism = false;
  bool full_injective = false;
  bool lower_bounded = false;
  bool carriers_agree = false;
  std::optional<Witness> defect;
  std::optional<Witness> d_cycle;
  std::vector<Mask> carriers;  ///< per ground point, the t with x ∈ ψ(t)
  std::vector<std::pair<Mask, Mask>> image;  ///< family ↦ closed set, over the top sublattice

  bool embedding_verified() const { return injective && meet_preserving && join_preserving; }
};

/// Composes ψ_X with φ and verifies it against Co(R^n, X). Throws ResourceError when n > max_n.
EmbeddingReport build_embedding(const ConstructionTable& ct, std::size_t max_n = 2);

}  // namespace cvxlat
