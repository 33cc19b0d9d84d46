#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cvxlat/geometry.hpp"
#include "cvxlat/lattice.hpp"

namespace cvxlat {

/// Elements t of B_{n+1} are masks over {0, ..., n}; families of them are masks over
/// t ∈ [0, 2^{n+1}), so n <= 5.
constexpr std::size_t kMaxSubmN = 5;

inline Mask b_top(std::size_t n) { return (Mask{1} << (n + 1)) - 1; }
inline std::size_t b_size(std::size_t n) { return std::size_t{1} << (n + 1); }

/// Smallest intersection-closed family containing `family`.
Mask meet_closure(Mask family, std::size_t n);
bool is_meet_closed(Mask family, std::size_t n);

/// F ↦ meet_closure(F) on the 2^{n+1} elements of B_{n+1}; with `with_top`,
/// the top element is always added.
class MeetClosure : public ClosureOperator {
 public:
  explicit MeetClosure(std::size_t n, bool with_top = false);
  std::size_t universe() const override { return b_size(n_); }
  Mask close(Mask y) const override;

 private:
  std::size_t n_;
  bool with_top_;
};

/// Full enumeration of Sub∧(B_{n+1}) (the empty family included), in lectic order.
/// Throws ResourceError when n > max_n.
std::vector<Mask> enumerate_subm(std::size_t n, std::size_t max_n = 2);
/// Streams the families without storing them (n <= 5).
void for_each_subm(std::size_t n, const std::function<bool(Mask)>& visit);
std::size_t count_subm(std::size_t n);

/// Sub∧(B_{n+1}) ordered by inclusion.
FiniteLattice subm_lattice(std::size_t n, std::size_t max_n = 2);
/// The sublattice of families containing the top of B_{n+1}.
FiniteLattice subm_top_lattice(std::size_t n, std::size_t max_n = 2);

/// Union of relatively open faces of a simplex. Piece t stands for the relative
/// interior of Co{p_i : i ∉ t}; t = top never occurs.
struct OpenFaceSet {
  std::size_t n = 0;
  Mask pieces = 0;
  friend bool operator==(const OpenFaceSet&, const OpenFaceSet&) = default;
};

/// The simplex must have n + 1 affinely independent vertices.
OpenFaceSet psi(Mask t, const VPolytope& simplex);
/// Throws InputError unless the family is intersection-closed.
OpenFaceSet phi(Mask family, const VPolytope& simplex);

/// Exact membership through barycentric coordinates.
bool contains(const OpenFaceSet& s, const QPoint& q, const VPolytope& simplex);
/// The piece t with q ∈ ψ(t), or nothing when q is outside the simplex.
std::optional<Mask> carrier_piece(const QPoint& q, const VPolytope& simplex);
MixedGenerators generators(const OpenFaceSet& s, const VPolytope& simplex);

struct ClaimJoinReport {
  bool holds = true;
  std::size_t samples = 0;
  std::string offending;  ///< failing piece or sample, empty when the claim holds
};

/// Co(ψ(a) ∪ ψ(b)) = ψ(a) ∪ ψ(b) ∪ ψ(a ∩ b). The inclusion ⊆ is decided exactly
/// face by face; ⊇ is checked by the explicit x, y, λ decomposition at every
/// point of ψ(a ∩ b) with positive barycentric coordinates of denominator <= 4.
ClaimJoinReport verify_claim_join(Mask a, Mask b, const VPolytope& simplex);

}  // namespace cvxlat
