#include "cvxlat/simplex_embedding.hpp"

#include <algorithm>
#include <bit>

#include "cvxlat/boolean_subm.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/linalg.hpp"

namespace cvxlat {

namespace {

std::size_t simplex_n(const VPolytope& simplex) {
  const auto k = simplex.vertices().size();
  if (k < 2 || simplex.dim_affine() + 1 != k) throw InputError("base simplex must have affinely independent vertices");
  return k - 1;
}

void require_members(Mask a, std::initializer_list<std::size_t> idx, std::size_t n) {
  if (a == 0 || (a >> (n + 1)) != 0) throw InputError("index set outside {0..n}");
  for (const auto i : idx) {
    if (!((a >> i) & 1U)) throw InputError("index " + std::to_string(i) + " not in " + mask_label(a));
  }
}

// Nonempty subsets of {0..n} with exactly k elements, ascending.
std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  for (Mask a = 1; a <= b_top(n); ++a) {
    if (static_cast<std::size_t>(std::popcount(a)) == k) out.push_back(a);
  }
  return out;
}

}  // namespace

VPolytope base_simplex(std::size_t n) {
  if (n < 1) throw InputError("the base simplex needs n >= 1");
  std::vector<QPoint> v{QPoint::zero(n)};
  for (std::size_t i = 0; i < n; ++i) v.push_back(QPoint::unit(n, i));
  return VPolytope::from_vertices(std::move(v));
}

VPolytope shrink(const VPolytope& s, const Rat& t) {
  if (sgn(t) <= 0 || t > 1) throw InputError("shrink ratio must lie in (0, 1]");
  const auto c = barycenter(s.vertices());
  std::vector<QPoint> out;
  for (const auto& p : s.vertices()) out.push_back(homothety(p, c, t));
  return VPolytope::from_vertices(std::move(out));
}

std::vector<QPoint> simplex_face(const VPolytope& simplex, Mask a) {
  std::vector<QPoint> out;
  for (const auto i : mask_members(a)) {
    if (i >= simplex.vertices().size()) throw InputError("face index outside the simplex");
    out.push_back(simplex.vertices()[i]);
  }
  return out;
}

QPoint p_point(const VPolytope& simplex, std::size_t i, Mask a, std::size_t j, const Rat& t) {
  const auto n = simplex_n(simplex);
  require_members(a, {i, j}, n);
  if (i == j) throw InputError("p(i,A,j) needs i != j");
  if (sgn(t) <= 0 || t >= 1) throw InputError("p(i,A,j) needs a ratio in (0, 1)");
  const auto face = simplex_face(simplex, a);
  const auto center = barycenter(face);
  const auto& p = simplex.vertices();
  // Unknowns: μ, then α_k for k ∈ A \ {j}:  p_i + μ (p_j - p_i) = Σ α_k p_k^t,  Σ α_k = 1.
  std::vector<std::size_t> ks;
  for (const auto k : mask_members(a)) {
    if (k != j) ks.push_back(k);
  }
  const std::size_t dim = simplex.dim_ambient();
  linalg::Matrix m(dim + 1, std::vector<Rat>(ks.size() + 1));
  std::vector<Rat> rhs(dim + 1);
  for (std::size_t c = 0; c < dim; ++c) {
    m[c][0] = p[j][c] - p[i][c];
    for (std::size_t q = 0; q < ks.size(); ++q) m[c][q + 1] = -homothety(p[ks[q]], center, t)[c];
    rhs[c] = -p[i][c];
  }
  for (std::size_t q = 0; q < ks.size(); ++q) m[dim][q + 1] = 1;
  rhs[dim] = 1;
  const auto sol = linalg::solve_unique(m, rhs);
  if (!sol) throw ConstructionError("segment and shrunken face do not meet in a unique point");
  const Rat& mu = (*sol)[0];
  if (sgn(mu) <= 0 || mu >= 1) throw ConstructionError("p(i,A,j) is not strictly between p_i and p_j");
  return lerp(p[i], p[j], mu);
}

VPolytope t_polytope(const VPolytope& simplex, Mask a, const Rat& t, std::size_t j) {
  std::vector<QPoint> pts;
  for (const auto i : mask_members(a)) {
    if (i == j) continue;
    pts.push_back(simplex.vertices()[i]);
    pts.push_back(p_point(simplex, i, a, j, t));
  }
  return VPolytope::from_points(std::move(pts));
}

VPolytope u_polytope(const VPolytope& simplex, Mask a, const Rat& t, std::size_t i) {
  require_members(a, {i}, simplex_n(simplex));
  std::vector<QPoint> pts{simplex.vertices()[i]};
  for (const auto j : mask_members(a)) {
    if (j != i) pts.push_back(p_point(simplex, i, a, j, t));
  }
  return VPolytope::from_points(std::move(pts));
}

bool next_level_condition(const VPolytope& simplex, std::size_t level, const Rat& shrink_amount, const Rat& next) {
  const auto n = simplex_n(simplex);
  if (level + 2 >= n + 1) return true;  // |A| <= 2: nothing to check
  const std::size_t size = n + 1 - level;
  const Rat ratio = 1 - shrink_amount;
  for (const auto a : subsets_of_size(n, size)) {
    std::map<std::size_t, VPolytope> u;
    for (const auto m : mask_members(a)) u.emplace(m, u_polytope(simplex, a, ratio, m));
    for (const auto i : mask_members(a)) {
      const Mask face = a & ~(Mask{1} << i);
      const auto center = barycenter(simplex_face(simplex, face));
      for (const auto m : mask_members(face)) {
        const auto q = homothety(simplex.vertices()[m], center, 1 - next);
        if (!hull_member(q, u.at(m).vertices())) return false;
      }
    }
  }
  return true;
}

Rat epsilon_search(const VPolytope& simplex, std::size_t level, const Rat& shrink_amount) {
  Rat eps = shrink_amount / 2;
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (next_level_condition(simplex, level, shrink_amount, eps)) return eps;
    eps /= 2;
  }
  throw ConstructionError("no admissible shrink amount after 64 halvings at level " + std::to_string(level));
}

ShrinkSchedule make_schedule(std::size_t n) {
  if (n < 1 || n > 3) throw UnsupportedError("the construction is supported for n in {1, 2, 3}");
  const auto simplex = base_simplex(n);
  ShrinkSchedule s{n, std::vector<Rat>(n + 1)};
  s.shrink[0] = Rat(1, 2);
  for (std::size_t k = 0; k + 2 <= n; ++k) s.shrink[k + 1] = epsilon_search(simplex, k, s.shrink[k]);
  s.shrink[n] = 0;
  return s;
}

std::string GroundLabel::text() const {
  if (center) return "v";
  return "p(" + std::to_string(i) + "," + mask_label(a) + ")";
}

std::size_t ConstructionTable::level(Mask a) const { return n + 1 - static_cast<std::size_t>(std::popcount(a)); }

const QPoint& ConstructionTable::p(std::size_t i, Mask a) const {
  const auto& pts = shrunken.at(a);
  const auto members = mask_members(a);
  const auto it = std::find(members.begin(), members.end(), i);
  if (it == members.end()) throw InputError("index " + std::to_string(i) + " not in " + mask_label(a));
  return pts[static_cast<std::size_t>(it - members.begin())];
}

VPolytope ConstructionTable::u(Mask a, std::size_t i) const {
  if (std::popcount(a) == 1) {
    require_members(a, {i}, n);
    return VPolytope::from_vertices({simplex.vertices()[i]});
  }
  return u_polytope(simplex, a, ratio(a), i);
}

ConstructionTable build_table(std::size_t n) { return build_table(n, make_schedule(n)); }

ConstructionTable build_table(std::size_t n, ShrinkSchedule schedule) {
  if (n < 1 || n > 3) throw UnsupportedError("the construction is supported for n in {1, 2, 3}");
  if (schedule.n != n || schedule.shrink.size() != n + 1) throw InputError("schedule does not match n");
  if (sgn(schedule.shrink[n]) != 0) throw InputError("singletons must not be shrunk");
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(schedule.shrink[k]) <= 0 || schedule.shrink[k] >= 1) throw InputError("shrink amounts must lie in (0, 1)");
  }
  ConstructionTable ct;
  ct.n = n;
  ct.simplex = base_simplex(n);
  ct.schedule = std::move(schedule);
  ct.v = barycenter(ct.simplex.vertices());
  for (Mask a = 1; a <= b_top(n); ++a) {
    const auto face = simplex_face(ct.simplex, a);
    const auto center = barycenter(face);
    const Rat r = ct.ratio(a);
    std::vector<QPoint> pts;
    for (const auto& p : face) pts.push_back(homothety(p, center, r));
    ct.shrunken.emplace(a, std::move(pts));
  }
  return ct;
}

FiniteGround ground_set(const ConstructionTable& ct, std::vector<GroundLabel>* labels) {
  std::vector<QPoint> pts{ct.v};
  std::vector<GroundLabel> lab{{true, 0, 0}};
  for (std::size_t size = ct.n; size >= 1; --size) {
    for (const auto a : subsets_of_size(ct.n, size)) {
      for (const auto i : mask_members(a)) {
        pts.push_back(ct.p(i, a));
        lab.push_back({false, i, a});
      }
    }
  }
  if (labels) *labels = std::move(lab);
  return FiniteGround(std::move(pts));
}

namespace {

std::string case_text(Mask a, std::initializer_list<std::pair<const char*, std::size_t>> idx) {
  std::string s = "A=" + mask_label(a);
  for (const auto& [name, v] : idx) s += std::string(", ") + name + "=" + std::to_string(v);
  return s;
}

void fail(LemmaCheck& c, std::string what) {
  if (c.holds) c.offending = std::move(what);
  c.holds = false;
}

std::vector<QPoint> midpoint_samples(const std::vector<QPoint>& u_vertices, const QPoint& apex) {
  std::vector<QPoint> out{apex};
  for (std::size_t x = 0; x < u_vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < u_vertices.size(); ++y) out.push_back(lerp(u_vertices[x], u_vertices[y], Rat(1, 2)));
  }
  return out;
}

}  // namespace

std::vector<LemmaCheck> verify_lemmas(const ConstructionTable& ct) {
  const auto n = ct.n;
  const auto& p = ct.simplex.vertices();
  const auto check = [](const char* name) {
    LemmaCheck c;
    c.lemma = name;
    return c;
  };
  auto cap = check("cap-inside-parallel-face"), u_in_t = check("u-inside-t"),
       u_face = check("u-meets-parallel-face-once"), q_hull = check("shrunken-inside-sample-hull"),
       cond = check("next-level-condition"), step = check("next-level-containment"), mono = check("u-monotone");

  for (Mask a = 1; a <= b_top(n); ++a) {
    const auto members = mask_members(a);
    if (members.size() < 2) continue;
    const Rat r = ct.ratio(a);
    const auto& sv = ct.shrunken.at(a);
    std::map<std::pair<std::size_t, std::size_t>, QPoint> pp;
    for (const auto i : members) {
      for (const auto j : members) {
        if (i != j) pp.emplace(std::make_pair(i, j), p_point(ct.simplex, i, a, j, r));
      }
    }
    std::map<std::size_t, std::vector<QPoint>> parallel_face, u_vertices;
    std::map<std::size_t, VPolytope> t_poly;
    for (const auto j : members) {
      for (const auto i : members) {
        if (i != j) parallel_face[j].push_back(pp.at({i, j}));
      }
      t_poly.emplace(j, t_polytope(ct.simplex, a, r, j));
      u_vertices[j] = u_polytope(ct.simplex, a, r, j).vertices();
    }

    for (const auto j : members) {
      ++cap.cases;
      std::vector<std::vector<QPoint>> polys{t_poly.at(j).vertices(), sv};
      if (!intersection_within(polys, h_representation(parallel_face.at(j)))) fail(cap, case_text(a, {{"j", j}}));
    }
    for (const auto i : members) {
      for (const auto j : members) {
        if (i == j) continue;
        ++u_in_t.cases;
        if (!polytope_contains(t_poly.at(j).vertices(), u_vertices.at(i))) fail(u_in_t, case_text(a, {{"i", i}, {"j", j}}));
        ++u_face.cases;
        const auto& q = pp.at({i, j});
        std::vector<std::vector<QPoint>> polys{u_vertices.at(i), parallel_face.at(j)};
        const std::vector<QPoint> single{q};
        if (!hull_member(q, u_vertices.at(i)) || !hull_member(q, parallel_face.at(j)) ||
            !intersection_within(polys, h_representation(single))) {
          fail(u_face, case_text(a, {{"i", i}, {"j", j}}));
        }
      }
    }

    // Sample tuples q_i ∈ U(A,i) minus the points p(i,A,j).
    std::vector<std::vector<QPoint>> samples;
    for (const auto i : members) samples.push_back(midpoint_samples(u_vertices.at(i), p[i]));
    std::vector<std::size_t> pick(members.size(), 0);
    for (;;) {
      ++q_hull.cases;
      std::vector<QPoint> q;
      for (std::size_t k = 0; k < members.size(); ++k) q.push_back(samples[k][pick[k]]);
      MixedGenerators open(ct.simplex.dim_ambient());
      open.add_open_face(VPolytope::from_vertices(q));
      for (const auto& w : sv) {
        if (!strict_hull_member(w, open)) {
          std::string where;
          for (const auto& x : q) where += to_string(x);
          fail(q_hull, case_text(a, {}) + ", q=" + where);
          break;
        }
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == samples[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }

    const auto lvl = ct.level(a);
    if (members.size() > 2) {
      const Rat& next = ct.schedule.shrink[lvl + 1];
      for (const auto i : members) {
        const Mask face = a & ~(Mask{1} << i);
        const auto center = barycenter(simplex_face(ct.simplex, face));
        for (const auto m : mask_members(face)) {
          ++cond.cases;
          if (!hull_member(homothety(p[m], center, 1 - next), u_vertices.at(m))) {
            fail(cond, case_text(a, {{"i", i}, {"m", m}}));
          }
        }
      }
      for (const auto i : members) {
        for (const auto j : members) {
          if (j <= i) continue;
          ++step.cases;
          auto pts = ct.shrunken.at(a & ~(Mask{1} << i));
          const auto& other = ct.shrunken.at(a & ~(Mask{1} << j));
          pts.insert(pts.end(), other.begin(), other.end());
          MixedGenerators open(ct.simplex.dim_ambient());
          open.add_open_face(VPolytope::from_vertices(pts));
          for (const auto& w : sv) {
            if (!strict_hull_member(w, open)) {
              fail(step, case_text(a, {{"i", i}, {"j", j}}));
              break;
            }
          }
        }
      }
    }
  }

  for (Mask b = 1; b <= b_top(n); ++b) {
    for (Mask a = b; a; a = (a - 1) & b) {
      for (const auto i : mask_members(a)) {
        ++mono.cases;
        if (!polytope_contains(ct.u(b, i).vertices(), ct.u(a, i).vertices())) {
          fail(mono, case_text(a, {{"i", i}}) + ", B=" + mask_label(b));
        }
      }
    }
  }
  return {cap, u_in_t, u_face, q_hull, cond, step, mono};
}

namespace {

Mask image_of(Mask family, const std::vector<Mask>& carriers) {
  Mask out = 0;
  for (std::size_t x = 0; x < carriers.size(); ++x) {
    if ((family >> carriers[x]) & 1U) out |= Mask{1} << x;
  }
  return out;
}

// Image indices in the target, or the first family whose image is not closed.
std::optional<std::size_t> map_into(const FiniteLattice& source, const FiniteLattice& target,
                                    const std::vector<Mask>& carriers, std::vector<std::size_t>& image) {
  image.clear();
  for (std::size_t s = 0; s < source.size(); ++s) {
    const auto idx = target.index_of(image_of(source.set(s), carriers));
    if (!idx) return s;
    image.push_back(*idx);
  }
  return std::nullopt;
}

}  // namespace

EmbeddingReport build_embedding(const ConstructionTable& ct, std::size_t max_n) {
  if (ct.n > max_n) {
    throw ResourceError("embedding verification for n = " + std::to_string(ct.n) + " exceeds max n = " + std::to_string(max_n));
  }
  EmbeddingReport rep;
  rep.n = ct.n;
  const auto x = ground_set(ct);
  rep.ground_size = x.size();
  const auto target = enumerate_closed_sets(x, x.size());
  rep.target_size = target.size();

  const Mask top = b_top(ct.n);
  rep.carriers_agree = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<Mask> hits;
    for (Mask t = 0; t < top; ++t) {
      if (strict_hull_member(x.point(k), generators(psi(t, ct.simplex), ct.simplex))) hits.push_back(t);
    }
    if (hits.size() != 1) throw ConstructionError("point " + to_string(x.point(k)) + " does not lie in exactly one piece");
    rep.carriers.push_back(hits[0]);
    if (carrier_piece(x.point(k), ct.simplex) != hits[0]) rep.carriers_agree = false;
  }

  const auto source = subm_top_lattice(ct.n, max_n);
  rep.source_size = source.size();
  std::vector<std::size_t> image;
  if (const auto bad = map_into(source, target, rep.carriers, image)) {
    rep.defect = Witness{WitnessKind::embedding_defect, {{"a", *bad}, {"b", *bad}}, "image is not a closed set"};
  } else {
    for (std::size_t s = 0; s < source.size(); ++s) rep.image.emplace_back(source.set(s), target.set(image[s]));
    const LatticeMap f{&source, &target, image};
    std::vector<std::size_t> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    rep.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.meet_preserving = rep.join_preserving = true;
    for (std::size_t a = 0; a < source.size(); ++a) {
      for (std::size_t b = a + 1; b < source.size(); ++b) {
        if (image[source.meet(a, b)] != target.meet(image[a], image[b])) rep.meet_preserving = false;
        if (image[source.join(a, b)] != target.join(image[a], image[b])) rep.join_preserving = false;
      }
    }
    const auto check = verify_embedding(f);
    if (!check.holds) rep.defect = check.witness;

    const auto full = subm_lattice(ct.n, max_n);
    rep.full_source_size = full.size();
    std::vector<std::size_t> full_image;
    if (!map_into(full, target, rep.carriers, full_image)) {
      const LatticeMap g{&full, &target, full_image};
      rep.full_homomorphism = verify_homomorphism(g).holds;
      std::sort(full_image.begin(), full_image.end());
      rep.full_injective = std::adjacent_find(full_image.begin(), full_image.end()) == full_image.end();
    }
  }

  const auto lb = check_lower_bounded(target);
  rep.lower_bounded = lb.holds;
  rep.d_cycle = lb.witness;
  return rep;
}

}  // namespace cvxlat
