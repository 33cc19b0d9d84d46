#include "cvxlat/boolean_subm.hpp"

#include <bit>

#include "cvxlat/errors.hpp"

namespace cvxlat {

namespace {

void require_n(std::size_t n) {
  if (n > kMaxSubmN) throw ResourceError("B_{n+1} families are limited to n <= " + std::to_string(kMaxSubmN));
}

std::size_t simplex_n(const VPolytope& simplex) {
  const auto k = simplex.vertices().size();
  if (k == 0 || simplex.dim_affine() + 1 != k) throw InputError("simplex vertices must be affinely independent");
  require_n(k - 1);
  return k - 1;
}

// Positive integer vectors of length k summing to d.
void compositions(std::size_t k, long d, std::vector<long>& cur, const std::function<void(const std::vector<long>&)>& f) {
  if (cur.size() + 1 == k) {
    if (d >= 1) {
      cur.push_back(d);
      f(cur);
      cur.pop_back();
    }
    return;
  }
  for (long v = 1; v <= d - static_cast<long>(k - cur.size() - 1); ++v) {
    cur.push_back(v);
    compositions(k, d - v, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Mask meet_closure(Mask family, std::size_t n) {
  require_n(n);
  for (;;) {
    Mask next = family;
    for (const auto s : mask_members(family)) {
      for (const auto t : mask_members(family)) next |= Mask{1} << (s & t);
    }
    if (next == family) return family;
    family = next;
  }
}

bool is_meet_closed(Mask family, std::size_t n) { return meet_closure(family, n) == family; }

MeetClosure::MeetClosure(std::size_t n, bool with_top) : n_(n), with_top_(with_top) { require_n(n); }

Mask MeetClosure::close(Mask y) const {
  if (with_top_) y |= Mask{1} << b_top(n_);
  return meet_closure(y, n_);
}

std::vector<Mask> enumerate_subm(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw ResourceError("full enumeration of Sub∧(B_" + std::to_string(n + 1) + ") exceeds max n = " + std::to_string(max_n));
  }
  return next_closure_all(MeetClosure(n), std::size_t{1} << 20);
}

void for_each_subm(std::size_t n, const std::function<bool(Mask)>& visit) { next_closure_each(MeetClosure(n), visit); }

std::size_t count_subm(std::size_t n) {
  std::size_t count = 0;
  for_each_subm(n, [&](Mask) {
    ++count;
    return true;
  });
  return count;
}

FiniteLattice subm_lattice(std::size_t n, std::size_t max_n) {
  const auto families = enumerate_subm(n, max_n);
  return FiniteLattice::from_sets(families, b_size(n), [n](Mask m) { return meet_closure(m, n); });
}

FiniteLattice subm_top_lattice(std::size_t n, std::size_t max_n) {
  if (n > max_n) throw ResourceError("Sub∧ sublattice exceeds max n = " + std::to_string(max_n));
  const MeetClosure op(n, true);
  return FiniteLattice::from_sets(next_closure_all(op), b_size(n), [&op](Mask m) { return op.close(m); });
}

OpenFaceSet psi(Mask t, const VPolytope& simplex) {
  const auto n = simplex_n(simplex);
  if (t & ~b_top(n)) throw InputError("element outside B_{n+1}");
  if (t == b_top(n)) return {n, 0};
  return {n, Mask{1} << t};
}

OpenFaceSet phi(Mask family, const VPolytope& simplex) {
  const auto n = simplex_n(simplex);
  if (b_size(n) < 64 && (family >> b_size(n)) != 0) throw InputError("family outside B_{n+1}");
  if (!is_meet_closed(family, n)) throw InputError("family " + mask_label(family) + " is not closed under intersection");
  return {n, family & ~(Mask{1} << b_top(n))};
}

std::optional<Mask> carrier_piece(const QPoint& q, const VPolytope& simplex) {
  const auto n = simplex_n(simplex);
  const auto w = barycentric_coordinates(q, simplex.vertices());
  if (!w) return std::nullopt;
  Mask support = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn((*w)[i]) < 0) return std::nullopt;
    if (sgn((*w)[i]) > 0) support |= Mask{1} << i;
  }
  return b_top(n) & ~support;
}

bool contains(const OpenFaceSet& s, const QPoint& q, const VPolytope& simplex) {
  const auto t = carrier_piece(q, simplex);
  return t && ((s.pieces >> *t) & 1U);
}

MixedGenerators generators(const OpenFaceSet& s, const VPolytope& simplex) {
  const auto n = simplex_n(simplex);
  MixedGenerators g(simplex.dim_ambient());
  for (const auto t : mask_members(s.pieces)) {
    const auto face = mask_members(b_top(n) & ~static_cast<Mask>(t));
    if (face.size() == 1) {
      g.add_point(simplex.vertices()[face[0]]);
    } else {
      g.add_open_face(simplex, Face{face});
    }
  }
  return g;
}

ClaimJoinReport verify_claim_join(Mask a, Mask b, const VPolytope& simplex) {
  const auto n = simplex_n(simplex);
  const Mask top = b_top(n);
  ClaimJoinReport report;
  const auto pa = psi(a, simplex), pb = psi(b, simplex);
  const OpenFaceSet both{n, pa.pieces | pb.pieces};
  const Mask rhs = both.pieces | psi(a & b, simplex).pieces;
  const auto gens = generators(both, simplex);

  // ⊆: the closed simplex is the disjoint union of the ψ(c), c ≠ top.
  if (!gens.empty()) {
    for (Mask c = 0; c < top; ++c) {
      if ((rhs >> c) & 1U) continue;
      const auto face = face_points(simplex, Face{mask_members(top & ~c)});
      if (hull_meets_relint(gens, face)) {
        report.holds = false;
        report.offending = "hull meets ψ(" + mask_label(c) + ")";
        return report;
      }
    }
  }

  // ⊇: only ψ(a ∩ b) needs an argument, and only for noncomparable a, b.
  const bool comparable = (a & ~b) == 0 || (b & ~a) == 0;
  if (comparable || a == top || b == top) return report;
  const Mask c = top & ~(a & b);
  const auto support = mask_members(c);
  const auto& p = simplex.vertices();
  std::vector<long> cur;
  const long max_den = std::max<long>(4, static_cast<long>(support.size()));
  for (long d = static_cast<long>(support.size()); d <= max_den && report.holds; ++d) {
    compositions(support.size(), d, cur, [&](const std::vector<long>& parts) {
      if (!report.holds) return;
      std::vector<Rat> z_w(n + 1);
      for (std::size_t k = 0; k < support.size(); ++k) z_w[support[k]] = make_rat(parts[k], d);
      Rat lambda;
      for (std::size_t k = 0; k <= n; ++k) {
        const Mask bit = Mask{1} << k;
        if ((b & bit) && !(a & bit)) lambda += z_w[k];
        if (!(a & bit) && !(b & bit)) lambda += z_w[k] / 2;
      }
      QPoint x = QPoint::zero(simplex.dim_ambient()), y = x, z = x;
      for (std::size_t k = 0; k <= n; ++k) {
        const Mask bit = Mask{1} << k;
        z += z_w[k] * p[k];
        if ((b & bit) && !(a & bit)) x += (z_w[k] / lambda) * p[k];
        if ((a & bit) && !(b & bit)) y += (z_w[k] / (1 - lambda)) * p[k];
        if (!(a & bit) && !(b & bit)) {
          x += (z_w[k] / (2 * lambda)) * p[k];
          y += (z_w[k] / (2 * (1 - lambda))) * p[k];
        }
      }
      ++report.samples;
      const bool ok = sgn(lambda) > 0 && lambda < 1 && contains(pa, x, simplex) && contains(pb, y, simplex) &&
                      lambda * x + (1 - lambda) * y == z && strict_hull_member(z, gens);
      if (!ok) {
        report.holds = false;
        report.offending = "decomposition fails at " + to_string(z);
      }
    });
  }
  return report;
}

}  // namespace cvxlat
