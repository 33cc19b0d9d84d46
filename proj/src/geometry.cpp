#include "cvxlat/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cvxlat/errors.hpp"
#include "cvxlat/linalg.hpp"
#include "cvxlat/lp.hpp"

namespace cvxlat {

QPoint QPoint::unit(std::size_t dim, std::size_t axis) {
  QPoint p = zero(dim);
  p[axis] = 1;
  return p;
}

QPoint& QPoint::operator+=(const QPoint& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

QPoint& QPoint::operator-=(const QPoint& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

QPoint& QPoint::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const QPoint& a, const QPoint& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

QPoint operator+(QPoint a, const QPoint& b) { return a += b; }
QPoint operator-(QPoint a, const QPoint& b) { return a -= b; }
QPoint operator*(const Rat& s, QPoint p) { return p *= s; }

QPoint lerp(const QPoint& a, const QPoint& b, const Rat& t) { return a + t * (b - a); }

QPoint barycenter(std::span<const QPoint> pts) {
  if (pts.empty()) throw InputError("barycenter of an empty point set");
  QPoint c = QPoint::zero(pts[0].dim());
  for (const auto& p : pts) c += p;
  c *= make_rat(1, static_cast<long>(pts.size()));
  return c;
}

QPoint homothety(const QPoint& p, const QPoint& center, const Rat& ratio) { return center + ratio * (p - center); }

std::string to_string(const QPoint& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out << ", ";
    out << p[i].get_str();
  }
  out << ')';
  return out.str();
}

void require_dim(std::span<const QPoint> pts, std::size_t dim) {
  for (const auto& p : pts) {
    if (p.dim() != dim) {
      throw InputError("dimension mismatch: expected " + std::to_string(dim) + ", got " + std::to_string(p.dim()));
    }
  }
}

Segment::Segment(QPoint a, QPoint b, bool a_closed, bool b_closed)
    : a_(std::move(a)), b_(std::move(b)), a_closed_(a_closed), b_closed_(b_closed) {
  if (a_.dim() != b_.dim()) throw InputError("segment endpoints have different dimensions");
  if (a_ == b_) throw InputError("degenerate segment at " + to_string(a_));
}

VPolytope VPolytope::from_points(std::vector<QPoint> pts) { return from_vertices(extreme_points(pts)); }

VPolytope VPolytope::from_vertices(std::vector<QPoint> vertices) {
  if (vertices.empty()) throw InputError("polytope without vertices");
  require_dim(vertices, vertices[0].dim());
  VPolytope p;
  p.dim_ambient_ = vertices[0].dim();
  p.dim_affine_ = affine_span_dim(vertices);
  p.vertices_ = std::move(vertices);
  return p;
}

std::vector<QPoint> face_points(const VPolytope& p, const Face& f) {
  std::vector<QPoint> out;
  out.reserve(f.vertices.size());
  for (const auto i : f.vertices) {
    if (i >= p.vertices().size()) throw InputError("face index out of range");
    out.push_back(p.vertices()[i]);
  }
  return out;
}

MixedGenerators& MixedGenerators::add_point(QPoint p) {
  if (p.dim() != dim_) throw InputError("generator point has wrong dimension");
  closed_points_.push_back(std::move(p));
  return *this;
}

MixedGenerators& MixedGenerators::add_segment(Segment s) {
  if (s.dim() != dim_) throw InputError("generator segment has wrong dimension");
  segments_.push_back(std::move(s));
  return *this;
}

MixedGenerators& MixedGenerators::add_open_face(VPolytope p, std::optional<Face> face) {
  if (p.dim_ambient() != dim_) throw InputError("generator polytope has wrong dimension");
  if (face) {
    if (face->vertices.empty()) throw InputError("empty face");
    face_points(p, *face);
  }
  open_faces_.push_back({std::move(p), std::move(face)});
  return *this;
}

MixedGenerators& MixedGenerators::add_closed_polytope(const VPolytope& p) {
  for (const auto& v : p.vertices()) add_point(v);
  return *this;
}

MixedGenerators::Normalized MixedGenerators::normalized() const {
  Normalized n;
  n.closed = closed_points_;
  for (const auto& s : segments_) {
    if (s.a_closed()) n.closed.push_back(s.a());
    if (s.b_closed()) n.closed.push_back(s.b());
    if (!s.a_closed() || !s.b_closed()) n.open.push_back({s.a(), s.b()});
  }
  for (const auto& f : open_faces_) {
    auto pts = f.face ? face_points(f.polytope, *f.face) : f.polytope.vertices();
    if (pts.size() == 1) {
      n.closed.push_back(std::move(pts[0]));
    } else {
      n.open.push_back(std::move(pts));
    }
  }
  return n;
}

MixedGenerators MixedGenerators::closed_relaxation() const {
  MixedGenerators out(dim_);
  const auto n = normalized();
  for (const auto& p : n.closed) out.add_point(p);
  for (const auto& group : n.open) {
    for (const auto& p : group) out.add_point(p);
  }
  return out;
}

bool Interval::contains(const Rat& t) const {
  if (t < lo || t > hi) return false;
  if (t == lo && !lo_closed) return false;
  if (t == hi && !hi_closed) return false;
  return true;
}

namespace {

// Weights on the generators: row 0 is the mass row, rows 1..dim the coordinates.
struct HullModel {
  LinearProgram lp;
  std::vector<StrictGroup> groups;
};

HullModel build_hull_model(const MixedGenerators::Normalized& g, std::size_t dim, const QPoint& rhs) {
  HullModel m;
  m.lp.add_row(1);
  for (std::size_t c = 0; c < dim; ++c) m.lp.add_row(rhs[c]);
  auto add_weight = [&](const QPoint& p) {
    const auto v = m.lp.add_var();
    m.lp.set_coeff(0, v, 1);
    for (std::size_t c = 0; c < dim; ++c) {
      if (sgn(p[c]) != 0) m.lp.set_coeff(c + 1, v, p[c]);
    }
    return v;
  };
  for (const auto& p : g.closed) add_weight(p);
  for (const auto& group : g.open) {
    StrictGroup sg;
    for (const auto& p : group) sg.vars.push_back(add_weight(p));
    m.groups.push_back(std::move(sg));
  }
  return m;
}

bool outside_bounding_box(const QPoint& q, std::span<const QPoint> pts) {
  for (std::size_t c = 0; c < q.dim(); ++c) {
    bool below = true, above = true;
    for (const auto& p : pts) {
      if (p[c] <= q[c]) below = false;
      if (p[c] >= q[c]) above = false;
      if (!below && !above) break;
    }
    if (below || above) return true;
  }
  return false;
}

// Local affine coordinates on the affine hull of a point set.
struct AffineFrame {
  QPoint origin;
  std::vector<std::vector<Rat>> basis;  // d ambient direction vectors
  std::vector<std::size_t> coords;      // d ambient coordinates on which the basis is invertible
  linalg::Matrix inv;                   // d x d

  std::size_t dim() const { return basis.size(); }

  std::vector<Rat> local(const QPoint& x) const {
    std::vector<Rat> out(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      for (std::size_t r = 0; r < dim(); ++r) out[k] += inv[k][r] * (x[coords[r]] - origin[coords[r]]);
    }
    return out;
  }
};

AffineFrame make_frame(std::span<const QPoint> pts) {
  AffineFrame f;
  f.origin = pts[0];
  const std::size_t n = f.origin.dim();
  linalg::Matrix rows;
  for (const auto& p : pts) {
    auto d = (p - f.origin).coords();
    rows.push_back(d);
    if (linalg::rank(rows) > f.basis.size()) {
      f.basis.push_back(std::move(d));
    } else {
      rows.pop_back();
    }
    if (f.basis.size() == n) break;
  }
  const std::size_t d = f.basis.size();
  linalg::Matrix m = f.basis;
  f.coords = linalg::rref(m);
  linalg::Matrix aug(d, std::vector<Rat>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) aug[r][k] = f.basis[k][f.coords[r]];
    aug[r][d + r] = 1;
  }
  linalg::rref(aug);
  f.inv.assign(d, std::vector<Rat>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) f.inv[r][k] = aug[r][d + k];
  }
  return f;
}

struct LocalFacet {
  std::vector<Rat> normal;  // normal·x <= offset on every point
  Rat offset;
  std::vector<std::size_t> tight;
};

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Facets of the full-dimensional hull of `pts` in R^d, d >= 1.
std::vector<LocalFacet> local_facets(const std::vector<std::vector<Rat>>& pts, std::size_t d) {
  std::vector<LocalFacet> out;
  std::set<std::vector<std::size_t>> seen;
  const std::size_t n = pts.size();
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  if (n < d) return out;
  for (;;) {
    linalg::Matrix diff;
    for (std::size_t k = 1; k < d; ++k) {
      std::vector<Rat> row(d);
      for (std::size_t c = 0; c < d; ++c) row[c] = pts[idx[k]][c] - pts[idx[0]][c];
      diff.push_back(std::move(row));
    }
    auto ns = linalg::nullspace(diff, d);
    if (ns.size() == 1) {
      auto h = std::move(ns[0]);
      Rat gamma = dot(h, pts[idx[0]]);
      bool le = true, ge = true;
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < n; ++i) {
        const int s = sgn(dot(h, pts[i]) - gamma);
        if (s > 0) le = false;
        if (s < 0) ge = false;
        if (s == 0) tight.push_back(i);
      }
      if ((le || ge) && seen.insert(tight).second) {
        if (!le) {
          for (auto& v : h) v = -v;
          gamma = -gamma;
        }
        out.push_back({std::move(h), std::move(gamma), std::move(tight)});
      }
    }
    // next d-subset
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

constexpr std::size_t kMaxFaceDim = 4;

}  // namespace

bool hull_member(const QPoint& q, std::span<const QPoint> pts) {
  if (pts.empty()) return false;
  require_dim(pts, q.dim());
  for (const auto& p : pts) {
    if (p == q) return true;
  }
  if (outside_bounding_box(q, pts)) return false;
  MixedGenerators::Normalized g;
  g.closed.assign(pts.begin(), pts.end());
  return build_hull_model(g, q.dim(), q).lp.feasible();
}

bool strict_hull_member(const QPoint& q, const MixedGenerators& gens) {
  if (q.dim() != gens.dim()) throw InputError("query point has wrong dimension");
  const auto g = gens.normalized();
  std::vector<QPoint> all = g.closed;
  for (const auto& group : g.open) all.insert(all.end(), group.begin(), group.end());
  if (std::find(g.closed.begin(), g.closed.end(), q) != g.closed.end()) return true;
  if (!hull_member(q, all)) return false;
  if (g.open.empty()) return true;
  auto m = build_hull_model(g, q.dim(), q);
  return StrictSystem(std::move(m.lp), std::move(m.groups)).feasible();
}

std::vector<QPoint> extreme_points(std::span<const QPoint> pts) {
  std::vector<QPoint> uniq;
  for (const auto& p : pts) {
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  if (!uniq.empty()) require_dim(uniq, uniq[0].dim());
  std::vector<QPoint> out;
  std::vector<QPoint> others;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < uniq.size(); ++j) {
      if (j != i) others.push_back(uniq[j]);
    }
    if (!hull_member(uniq[i], others)) out.push_back(uniq[i]);
  }
  return out;
}

std::size_t affine_span_dim(std::span<const QPoint> pts) {
  if (pts.empty()) return 0;
  linalg::Matrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back((pts[i] - pts[0]).coords());
  return linalg::rank(std::move(rows));
}

std::vector<Face> faces(const VPolytope& p) {
  const auto& verts = p.vertices();
  const std::size_t n = verts.size();
  if (p.dim_affine() > kMaxFaceDim) {
    throw UnsupportedError("face enumeration is limited to affine dimension " + std::to_string(kMaxFaceDim));
  }
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  found.insert(all);
  if (p.dim_affine() > 0) {
    const auto frame = make_frame(verts);
    std::vector<std::vector<Rat>> local;
    for (const auto& v : verts) local.push_back(frame.local(v));
    std::vector<std::vector<std::size_t>> facets;
    for (auto& f : local_facets(local, frame.dim())) facets.push_back(std::move(f.tight));
    std::vector<std::vector<std::size_t>> frontier = facets;
    for (const auto& f : facets) found.insert(f);
    while (!frontier.empty()) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& f : frontier) {
        for (const auto& g : facets) {
          std::vector<std::size_t> meet;
          std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
          if (!meet.empty() && found.insert(meet).second) next.push_back(std::move(meet));
        }
      }
      frontier.swap(next);
    }
  }
  std::vector<Face> out;
  for (const auto& f : found) out.push_back(Face{f});
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

bool is_face(const VPolytope& p, const Face& f) {
  const auto inside = face_points(p, f);
  if (inside.empty()) return false;
  std::vector<bool> in(p.vertices().size(), false);
  for (const auto i : f.vertices) in[i] = true;
  std::vector<QPoint> rest;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!in[i]) rest.push_back(p.vertices()[i]);
  }
  if (rest.empty()) return true;
  return !polytopes_intersect(inside, rest);
}

std::optional<Interval> segment_hull_interval(const Segment& s, const MixedGenerators& gens) {
  if (s.dim() != gens.dim()) throw InputError("segment has wrong dimension");
  if (gens.empty()) return std::nullopt;
  const auto g = gens.normalized();
  const std::size_t dim = s.dim();
  auto m = build_hull_model(g, dim, s.a());
  const auto lambda = m.lp.add_var();
  const auto kappa = m.lp.add_var();
  for (std::size_t c = 0; c < dim; ++c) {
    const Rat d = s.b()[c] - s.a()[c];
    if (sgn(d) != 0) m.lp.set_coeff(c + 1, lambda, -d);
  }
  const auto unit = m.lp.add_row(1);
  m.lp.set_coeff(unit, lambda, 1);
  m.lp.set_coeff(unit, kappa, 1);
  auto closed = StrictSystem(std::move(m.lp), std::move(m.groups)).reduce();
  if (!closed) return std::nullopt;

  closed->set_objective(lambda, -1);
  const auto lo_sol = closed->maximize();
  closed->set_objective(lambda, 1);
  const auto hi_sol = closed->maximize();
  const Rat lo = -lo_sol.objective;
  const Rat hi = hi_sol.objective;

  auto endpoint_in = [&](const Rat& t) {
    if (t == 0 && !s.a_closed()) return false;
    if (t == 1 && !s.b_closed()) return false;
    return strict_hull_member(s.point_at(t), gens);
  };
  Interval out{lo, hi, endpoint_in(lo), lo == hi ? false : endpoint_in(hi)};
  if (lo == hi) {
    if (!out.lo_closed) return std::nullopt;
    out.hi_closed = true;
  }
  return out;
}

std::vector<SegmentPiece> segment_hull_intersection(const Segment& s, const MixedGenerators& gens) {
  const auto iv = segment_hull_interval(s, gens);
  if (!iv) return {};
  return {SegmentPiece{s.point_at(iv->lo), s.point_at(iv->hi), iv->lo_closed, iv->hi_closed}};
}

bool hull_meets_relint(const MixedGenerators& gens, std::span<const QPoint> region) {
  if (region.empty() || gens.empty()) return false;
  require_dim(region, gens.dim());
  const std::size_t dim = gens.dim();
  auto m = build_hull_model(gens.normalized(), dim, QPoint::zero(dim));
  const auto mass = m.lp.add_row(1);
  StrictGroup req{{}, Strictness::required};
  for (const auto& p : region) {
    const auto v = m.lp.add_var();
    m.lp.set_coeff(mass, v, 1);
    for (std::size_t c = 0; c < dim; ++c) {
      if (sgn(p[c]) != 0) m.lp.set_coeff(c + 1, v, -p[c]);
    }
    req.vars.push_back(v);
  }
  m.groups.push_back(std::move(req));
  return StrictSystem(std::move(m.lp), std::move(m.groups)).feasible();
}

namespace {

// Weights for every polytope, with all hull points identified. Variables of
// polytope k start at offsets[k].
struct IntersectionModel {
  LinearProgram lp;
  std::vector<std::size_t> offsets;
};

IntersectionModel build_intersection(std::span<const std::vector<QPoint>> polys) {
  IntersectionModel m;
  if (polys.empty()) throw InputError("intersection of no polytopes");
  const std::size_t dim = polys[0].empty() ? 0 : polys[0][0].dim();
  for (const auto& p : polys) require_dim(p, dim);
  std::vector<std::size_t> coord_rows;
  for (std::size_t c = 0; c < dim && polys.size() > 1; ++c) {
    for (std::size_t k = 1; k < polys.size(); ++k) coord_rows.push_back(m.lp.add_row(0));
  }
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto mass = m.lp.add_row(1);
    m.offsets.push_back(m.lp.num_vars());
    for (const auto& p : polys[k]) {
      const auto v = m.lp.add_var();
      m.lp.set_coeff(mass, v, 1);
      for (std::size_t c = 0; c < dim; ++c) {
        if (sgn(p[c]) == 0) continue;
        // row (c, k') states  point_k' - point_0 = 0
        for (std::size_t kk = 1; kk < polys.size(); ++kk) {
          const auto row = coord_rows[c * (polys.size() - 1) + (kk - 1)];
          if (k == 0) m.lp.set_coeff(row, v, -p[c]);
          if (k == kk) m.lp.set_coeff(row, v, p[c]);
        }
      }
    }
  }
  return m;
}

}  // namespace

bool polytopes_intersect(std::span<const QPoint> a, std::span<const QPoint> b) {
  if (a.empty() || b.empty()) return false;
  std::vector<std::vector<QPoint>> polys{{a.begin(), a.end()}, {b.begin(), b.end()}};
  return build_intersection(polys).lp.feasible();
}

bool polytope_contains(std::span<const QPoint> outer, std::span<const QPoint> inner) {
  return std::all_of(inner.begin(), inner.end(), [&](const QPoint& q) { return hull_member(q, outer); });
}

HRep h_representation(std::span<const QPoint> pts) {
  if (pts.empty()) throw InputError("H-representation of an empty point set");
  require_dim(pts, pts[0].dim());
  const std::size_t n = pts[0].dim();
  const auto frame = make_frame(pts);
  const std::size_t d = frame.dim();
  if (d > kMaxFaceDim) {
    throw UnsupportedError("H-representation is limited to affine dimension " + std::to_string(kMaxFaceDim));
  }
  HRep h;
  h.dim = n;
  for (auto& e : linalg::nullspace(frame.basis, n)) {
    Rat off = dot(e, frame.origin.coords());
    h.equalities.push_back({std::move(e), std::move(off)});
  }
  if (d == 0) return h;
  std::vector<std::vector<Rat>> local;
  for (const auto& p : pts) local.push_back(frame.local(p));
  for (const auto& f : local_facets(local, d)) {
    std::vector<Rat> a(n);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) a[frame.coords[r]] += f.normal[k] * frame.inv[k][r];
    }
    Rat off = f.offset + dot(a, frame.origin.coords());
    h.inequalities.push_back({std::move(a), std::move(off)});
  }
  return h;
}

bool intersection_within(std::span<const std::vector<QPoint>> polys, const HRep& target) {
  auto m = build_intersection(polys);
  if (!m.lp.feasible()) return true;
  const auto& first = polys[0];
  auto bound = [&](const std::vector<Rat>& normal, int sign) {
    LinearProgram lp = m.lp;
    for (std::size_t i = 0; i < first.size(); ++i) {
      const Rat v = dot(normal, first[i].coords());
      if (sgn(v) != 0) lp.set_objective(m.offsets[0] + i, sign * v);
    }
    return lp.maximize().objective;
  };
  for (const auto& e : target.equalities) {
    if (bound(e.normal, 1) != e.offset || -bound(e.normal, -1) != e.offset) return false;
  }
  for (const auto& f : target.inequalities) {
    if (bound(f.normal, 1) > f.offset) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> barycentric_coordinates(const QPoint& q, std::span<const QPoint> simplex) {
  if (simplex.empty()) throw InputError("barycentric coordinates on an empty simplex");
  require_dim(simplex, q.dim());
  if (affine_span_dim(simplex) + 1 != simplex.size()) throw InputError("simplex vertices are affinely dependent");
  linalg::Matrix a(q.dim() + 1, std::vector<Rat>(simplex.size()));
  std::vector<Rat> b(q.dim() + 1);
  for (std::size_t j = 0; j < simplex.size(); ++j) {
    a[0][j] = 1;
    for (std::size_t c = 0; c < q.dim(); ++c) a[c + 1][j] = simplex[j][c];
  }
  b[0] = 1;
  for (std::size_t c = 0; c < q.dim(); ++c) b[c + 1] = q[c];
  return linalg::solve_unique(a, b);
}

}  // namespace cvxlat
