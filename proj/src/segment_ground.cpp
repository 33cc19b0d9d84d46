#include "cvxlat/segment_ground.hpp"

#include <algorithm>

#include "cvxlat/errors.hpp"
#include "cvxlat/linalg.hpp"
#include "cvxlat/parallel.hpp"
#include "cvxlat/rational.hpp"

namespace cvxlat {

namespace {

// Same point set, allowing reversed orientation.
bool same_segment(const Segment& s, const Segment& t) {
  if (s.a() == t.a() && s.b() == t.b()) return s.a_closed() == t.a_closed() && s.b_closed() == t.b_closed();
  if (s.a() == t.b() && s.b() == t.a()) return s.a_closed() == t.b_closed() && s.b_closed() == t.a_closed();
  return false;
}

// t with q = s.point_at(t), for q on the line of s.
std::optional<Rat> line_param(const Segment& s, const QPoint& q) {
  const auto d = s.b() - s.a();
  std::optional<Rat> t;
  for (std::size_t c = 0; c < d.dim(); ++c) {
    if (sgn(d[c]) != 0) {
      t = (q[c] - s.a()[c]) / d[c];
      break;
    }
  }
  if (!t || s.point_at(*t) != q) return std::nullopt;
  return t;
}

bool interval_empty(const Interval& iv) {
  return iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed));
}

bool interval_within(const Interval& in, const Interval& out) {
  if (in.lo < out.lo || (in.lo == out.lo && in.lo_closed && !out.lo_closed)) return false;
  if (in.hi > out.hi || (in.hi == out.hi && in.hi_closed && !out.hi_closed)) return false;
  return true;
}

// Image of the intervals of carrier s on carrier r, in the parameters of r.
std::vector<Interval> transfer(const Segment& s, const std::vector<Interval>& ivs, const Segment& r, const Interval& r_domain) {
  std::vector<Interval> out;
  if (ivs.empty()) return out;
  const auto ua = line_param(r, s.a());
  const auto ub = line_param(r, s.b());
  if (ua && ub) {
    // Collinear: u(t) = ua + t (ub - ua).
    const Rat beta = *ub - *ua;
    for (const auto& iv : ivs) {
      Interval img{*ua + iv.lo * beta, *ua + iv.hi * beta, iv.lo_closed, iv.hi_closed};
      if (sgn(beta) < 0) img = Interval{img.hi, img.lo, iv.hi_closed, iv.lo_closed};
      if (auto cut = intersect(img, r_domain)) out.push_back(*cut);
    }
    return out;
  }
  // Otherwise the lines meet in at most one point.
  const auto ds = s.b() - s.a(), dr = r.b() - r.a();
  linalg::Matrix m(s.dim(), std::vector<Rat>(2));
  std::vector<Rat> rhs(s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c) {
    m[c][0] = ds[c];
    m[c][1] = -dr[c];
    rhs[c] = r.a()[c] - s.a()[c];
  }
  const auto sol = linalg::solve_unique(m, rhs);
  if (!sol) return out;
  const Rat& t = (*sol)[0];
  const Rat& u = (*sol)[1];
  if (!r_domain.contains(u)) return out;
  for (const auto& iv : ivs) {
    if (iv.contains(t)) {
      out.push_back(Interval{u, u, true, true});
      break;
    }
  }
  return out;
}

void require_same_ground(const SegmentUnionGround& x, const SubsegmentSet& y) {
  if (y.pieces.size() != x.size()) throw InputError("subsegment set does not match the ground");
}

std::string interval_text(const Interval& iv) {
  if (iv.is_point()) return "{" + format_rat(iv.lo) + "}";
  return std::string(iv.lo_closed ? "[" : "(") + format_rat(iv.lo) + "," + format_rat(iv.hi) + (iv.hi_closed ? "]" : ")");
}

}  // namespace

SegmentUnionGround::SegmentUnionGround(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw InputError("segment ground needs at least one segment");
  dim_ = segments_.front().dim();
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (segments_[k].dim() != dim_) throw InputError("segments of different dimensions");
    for (std::size_t j = 0; j < k; ++j) {
      if (same_segment(segments_[j], segments_[k])) {
        throw InputError("segments " + std::to_string(j) + " and " + std::to_string(k) + " are identical");
      }
    }
  }
}

Interval SegmentUnionGround::domain(std::size_t k) const {
  const auto& s = segments_.at(k);
  return Interval{0, 1, s.a_closed(), s.b_closed()};
}

bool SegmentUnionGround::contains(const QPoint& q) const {
  for (std::size_t k = 0; k < size(); ++k) {
    const auto t = line_param(segments_[k], q);
    if (t && domain(k).contains(*t)) return true;
  }
  return false;
}

bool SubsegmentSet::empty() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.empty(); });
}

SubsegmentSet empty_set(const SegmentUnionGround& x) { return SubsegmentSet{std::vector<std::vector<Interval>>(x.size())}; }

SubsegmentSet whole(const SegmentUnionGround& x) {
  auto y = empty_set(x);
  for (std::size_t k = 0; k < x.size(); ++k) y.pieces[k].push_back(x.domain(k));
  return canonicalize(x, y);
}

SubsegmentSet subsegment(const SegmentUnionGround& x, std::size_t carrier, const Interval& iv) {
  if (carrier >= x.size()) throw InputError("carrier index out of range");
  auto y = empty_set(x);
  if (auto cut = intersect(iv, x.domain(carrier))) y.pieces[carrier].push_back(*cut);
  return canonicalize(x, y);
}

SubsegmentSet subsegment(const SegmentUnionGround& x, std::size_t carrier, const QPoint& from, const QPoint& to,
                         bool from_closed, bool to_closed) {
  if (carrier >= x.size()) throw InputError("carrier index out of range");
  const auto& s = x.segment(carrier);
  const auto t0 = line_param(s, from), t1 = line_param(s, to);
  if (!t0 || !t1) throw InputError("subsegment endpoints are not on carrier " + std::to_string(carrier));
  Interval iv{*t0, *t1, from_closed, to_closed};
  if (*t1 < *t0) iv = Interval{*t1, *t0, to_closed, from_closed};
  return subsegment(x, carrier, iv);
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo;
    out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi;
    out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (interval_empty(out)) return std::nullopt;
  return out;
}

std::vector<Interval> normalize_intervals(std::vector<Interval> ivs) {
  std::erase_if(ivs, interval_empty);
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> out;
  for (const auto& iv : ivs) {
    if (!out.empty()) {
      auto& cur = out.back();
      if (iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed))) {
        if (iv.hi > cur.hi) {
          cur.hi = iv.hi;
          cur.hi_closed = iv.hi_closed;
        } else if (iv.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

SubsegmentSet canonicalize(const SegmentUnionGround& x, const SubsegmentSet& y) {
  require_same_ground(x, y);
  SubsegmentSet clipped = empty_set(x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (const auto& iv : y.pieces[k]) {
      if (auto cut = intersect(iv, x.domain(k))) clipped.pieces[k].push_back(*cut);
    }
    clipped.pieces[k] = normalize_intervals(std::move(clipped.pieces[k]));
  }
  SubsegmentSet out = clipped;
  for (std::size_t s = 0; s < x.size(); ++s) {
    for (std::size_t r = 0; r < x.size(); ++r) {
      if (r == s) continue;
      auto img = transfer(x.segment(s), clipped.pieces[s], x.segment(r), x.domain(r));
      out.pieces[r].insert(out.pieces[r].end(), img.begin(), img.end());
    }
  }
  for (auto& p : out.pieces) p = normalize_intervals(std::move(p));
  return out;
}

bool contains(const SegmentUnionGround& x, const SubsegmentSet& y, const QPoint& q) {
  require_same_ground(x, y);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto t = line_param(x.segment(k), q);
    if (!t) continue;
    for (const auto& iv : y.pieces[k]) {
      if (iv.contains(*t)) return true;
    }
  }
  return false;
}

MixedGenerators generators(const SegmentUnionGround& x, const SubsegmentSet& y) {
  require_same_ground(x, y);
  MixedGenerators g(x.dim());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto& s = x.segment(k);
    for (const auto& iv : y.pieces[k]) {
      if (iv.is_point()) {
        g.add_point(s.point_at(iv.lo));
      } else {
        g.add_segment(Segment(s.point_at(iv.lo), s.point_at(iv.hi), iv.lo_closed, iv.hi_closed));
      }
    }
  }
  return g;
}

SubsegmentSet seg_closure(const SegmentUnionGround& x, const SubsegmentSet& y) {
  require_same_ground(x, y);
  auto out = empty_set(x);
  if (y.empty()) return out;
  const auto gens = generators(x, y);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (auto iv = segment_hull_interval(x.segment(k), gens)) out.pieces[k].push_back(*iv);
  }
  return out;
}

SubsegmentSet seg_union(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b) {
  require_same_ground(x, a);
  require_same_ground(x, b);
  auto out = a;
  for (std::size_t k = 0; k < x.size(); ++k) out.pieces[k].insert(out.pieces[k].end(), b.pieces[k].begin(), b.pieces[k].end());
  return canonicalize(x, out);
}

SubsegmentSet seg_join(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b) {
  return seg_closure(x, seg_union(x, a, b));
}

SubsegmentSet seg_meet(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b) {
  const auto ca = canonicalize(x, a), cb = canonicalize(x, b);
  auto out = empty_set(x);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (const auto& u : ca.pieces[k]) {
      for (const auto& v : cb.pieces[k]) {
        if (auto w = intersect(u, v)) out.pieces[k].push_back(*w);
      }
    }
    out.pieces[k] = normalize_intervals(std::move(out.pieces[k]));
  }
  return out;
}

bool is_closed(const SegmentUnionGround& x, const SubsegmentSet& y) { return seg_closure(x, y) == canonicalize(x, y); }

bool is_subset(const SegmentUnionGround& x, const SubsegmentSet& a, const SubsegmentSet& b) {
  const auto ca = canonicalize(x, a), cb = canonicalize(x, b);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (const auto& u : ca.pieces[k]) {
      if (std::none_of(cb.pieces[k].begin(), cb.pieces[k].end(), [&](const Interval& v) { return interval_within(u, v); })) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(const SubsegmentSet& y) {
  std::string s;
  for (std::size_t k = 0; k < y.pieces.size(); ++k) {
    for (const auto& iv : y.pieces[k]) {
      if (!s.empty()) s += ' ';
      s += std::to_string(k) + ":" + interval_text(iv);
    }
  }
  return s.empty() ? "{}" : s;
}

ConditionReport check_condition_disjoint(const SegmentUnionGround& x) {
  ConditionReport rep;
  for (std::size_t s = 0; s < x.size(); ++s) {
    for (std::size_t t = s + 1; t < x.size(); ++t) {
      const std::vector<QPoint> u{x.segment(s).a(), x.segment(s).b()};
      const std::vector<QPoint> v{x.segment(t).a(), x.segment(t).b()};
      if (polytopes_intersect(u, v)) {
        rep.holds = false;
        rep.offending = {s, t};
        rep.detail = "closures of segments " + std::to_string(s) + " and " + std::to_string(t) + " meet";
        return rep;
      }
    }
  }
  return rep;
}

ConditionReport check_condition_faces(const SegmentUnionGround& x, const VPolytope& p) {
  if (p.dim_ambient() != x.dim()) throw InputError("polytope and ground differ in dimension");
  std::vector<std::vector<QPoint>> proper;
  for (const auto& f : faces(p)) {
    if (f.vertices.size() < p.vertices().size()) proper.push_back(face_points(p, f));
  }
  ConditionReport rep;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto& s = x.segment(k);
    const bool inside = std::any_of(proper.begin(), proper.end(), [&](const std::vector<QPoint>& f) {
      return hull_member(s.a(), f) && hull_member(s.b(), f);
    });
    if (!inside) {
      rep.holds = false;
      rep.offending = {k};
      rep.detail = "segment " + std::to_string(k) + " lies in no proper face";
      return rep;
    }
  }
  return rep;
}

SubsegmentSet random_closed_set(const SegmentUnionGround& x, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 9);
  auto y = empty_set(x);
  if (coin(rng) == 0) return y;
  std::uniform_int_distribution<std::size_t> carrier(0, x.size() - 1), count(1, std::min<std::size_t>(3, x.size()));
  std::uniform_int_distribution<long> quarter(0, 4);
  std::bernoulli_distribution closed(0.5);
  const auto pieces = count(rng);
  for (std::size_t i = 0; i < pieces; ++i) {
    long u = quarter(rng), v = quarter(rng);
    if (u > v) std::swap(u, v);
    Interval iv{make_rat(u, 4), make_rat(v, 4), closed(rng), closed(rng)};
    if (u == v) iv.lo_closed = iv.hi_closed = true;
    const auto k = carrier(rng);
    if (auto cut = intersect(iv, x.domain(k))) y.pieces[k].push_back(*cut);
  }
  return seg_closure(x, canonicalize(x, y));
}

namespace {

// 0: premise fails, 1: implication holds, 2: violation.
int sdv_verdict(const SegmentUnionGround& x, const SdvTriple& t) {
  const auto a = seg_closure(x, t.a), b = seg_closure(x, t.b), c = seg_closure(x, t.c);
  const auto ab = seg_join(x, a, b);
  if (ab != seg_join(x, a, c)) return 0;
  return seg_join(x, a, seg_meet(x, b, c)) == ab ? 1 : 2;
}

SdvReport collect(const std::vector<SdvTriple>& triples, const std::vector<int>& verdict) {
  SdvReport rep;
  rep.checked = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (verdict[i] > 0) ++rep.premises;
    if (verdict[i] == 2 && rep.holds) {
      rep.holds = false;
      rep.violation = triples[i];
    }
  }
  return rep;
}

}  // namespace

SdvReport sdv_spot_check_serial(const SegmentUnionGround& x, const std::vector<SdvTriple>& triples) {
  std::vector<int> verdict(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) verdict[i] = sdv_verdict(x, triples[i]);
  return collect(triples, verdict);
}

SdvReport sdv_spot_check(const SegmentUnionGround& x, const std::vector<SdvTriple>& triples) {
  std::vector<int> verdict(triples.size());
  const int n = static_cast<int>(triples.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) if (n > 1)
  for (int i = 0; i < n; ++i) verdict[i] = sdv_verdict(x, triples[i]);
  return collect(triples, verdict);
}

SdvReport sdv_spot_check(const SegmentUnionGround& x, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SdvTriple> triples;
  for (std::size_t i = 0; i < count; ++i) {
    auto a = random_closed_set(x, rng);
    auto b = random_closed_set(x, rng);
    auto c = random_closed_set(x, rng);
    triples.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return sdv_spot_check(x, triples);
}

std::vector<QPoint> extreme_points_of_closure(const SegmentUnionGround& x) {
  std::vector<QPoint> ends;
  for (const auto& s : x.segments()) {
    ends.push_back(s.a());
    ends.push_back(s.b());
  }
  return extreme_points(ends);
}

namespace {

void require_inside(std::span<const QPoint> pts, const VPolytope& p) {
  for (const auto& q : pts) {
    if (q.dim() != p.dim_ambient() || !hull_member(q, p.vertices())) throw InputError("point " + to_string(q) + " is outside P");
  }
}

std::vector<QPoint> checked_face(const VPolytope& p, const Face& f) {
  if (f.vertices.empty() || !is_face(p, f)) throw InputError("not a face of the polytope");
  return face_points(p, f);
}

}  // namespace

FaceRestrictionReport face_restriction_check(std::span<const QPoint> y, const VPolytope& p, const Face& f) {
  require_inside(y, p);
  const auto fp = checked_face(p, f);
  FaceRestrictionReport rep;
  if (y.empty()) return rep;
  std::vector<QPoint> yf;
  for (const auto& q : y) {
    if (hull_member(q, fp)) yf.push_back(q);
  }
  const std::vector<QPoint> ys(y.begin(), y.end());
  if (yf.empty()) {
    rep.holds = !polytopes_intersect(ys, fp);
    if (!rep.holds) rep.detail = "Co(Y) meets F but Y misses F";
    return rep;
  }
  const std::vector<std::vector<QPoint>> polys{ys, fp};
  rep.holds = intersection_within(polys, h_representation(yf));
  if (!rep.holds) rep.detail = "Co(Y) ∩ F leaves Co(Y ∩ F)";
  return rep;
}

FaceRestrictionReport face_restriction_check(const SegmentUnionGround& x, const SubsegmentSet& y, const VPolytope& p,
                                             const Face& f) {
  require_same_ground(x, y);
  for (const auto& s : x.segments()) {
    const std::vector<QPoint> ends{s.a(), s.b()};
    require_inside(ends, p);
  }
  const auto fp = checked_face(p, f);
  MixedGenerators face_gens(x.dim());
  face_gens.add_closed_polytope(VPolytope::from_points(fp));

  const auto gy = generators(x, y);
  MixedGenerators gyf(x.dim());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto& s = x.segment(k);
    for (const auto& iv : y.pieces[k]) {
      if (iv.is_point()) {
        const auto q = s.point_at(iv.lo);
        if (hull_member(q, fp)) gyf.add_point(q);
        continue;
      }
      const Segment piece(s.point_at(iv.lo), s.point_at(iv.hi), iv.lo_closed, iv.hi_closed);
      if (const auto cut = segment_hull_interval(piece, face_gens)) {
        if (cut->is_point()) {
          gyf.add_point(piece.point_at(cut->lo));
        } else {
          gyf.add_segment(Segment(piece.point_at(cut->lo), piece.point_at(cut->hi), cut->lo_closed, cut->hi_closed));
        }
      }
    }
  }

  std::vector<Segment> probes = x.segments();
  for (std::size_t i = 0; i < fp.size(); ++i) {
    for (std::size_t j = i + 1; j < fp.size(); ++j) probes.emplace_back(fp[i], fp[j]);
  }
  FaceRestrictionReport rep;
  const auto side = [](const Segment& s, const MixedGenerators& g) -> std::optional<Interval> {
    if (g.empty()) return std::nullopt;
    return segment_hull_interval(s, g);
  };
  for (const auto& s : probes) {
    std::optional<Interval> lhs;
    const auto in_hull = side(s, gy), in_face = side(s, face_gens);
    if (in_hull && in_face) lhs = intersect(*in_hull, *in_face);
    const auto rhs = side(s, gyf);
    if (lhs != rhs) {
      rep.holds = false;
      rep.detail = "sides differ on the segment " + to_string(s.a()) + "-" + to_string(s.b());
      return rep;
    }
  }
  for (const auto& q : fp) {
    const bool lhs = !gy.empty() && strict_hull_member(q, gy);
    const bool rhs = !gyf.empty() && strict_hull_member(q, gyf);
    if (lhs != rhs) {
      rep.holds = false;
      rep.detail = "sides differ at the vertex " + to_string(q);
      return rep;
    }
  }
  return rep;
}

FaceHomReport face_homomorphism_check(const FiniteGround& x, const VPolytope& p, const Face& f, std::size_t max_ground) {
  require_inside(x.points(), p);
  const auto fp = checked_face(p, f);
  std::vector<std::size_t> on_face;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (hull_member(x.point(i), fp)) on_face.push_back(i);
  }
  const auto restrict_mask = [&](Mask a) {
    Mask out = 0;
    for (std::size_t k = 0; k < on_face.size(); ++k) {
      if ((a >> on_face[k]) & 1U) out |= Mask{1} << k;
    }
    return out;
  };
  const auto source = enumerate_closed_sets(x, max_ground);
  FaceHomReport rep;
  rep.source_size = source.size();
  if (on_face.empty()) {
    rep.target_size = 1;
    return rep;
  }
  std::vector<QPoint> sub;
  for (const auto i : on_face) sub.push_back(x.point(i));
  const FiniteGround xf(std::move(sub));
  const auto target = enumerate_closed_sets(xf, max_ground);
  rep.target_size = target.size();

  std::vector<std::size_t> image(source.size());
  std::vector<char> hit(target.size(), 0);
  for (std::size_t a = 0; a < source.size(); ++a) {
    const auto idx = target.index_of(restrict_mask(source.set(a)));
    if (!idx) {
      rep.joins = rep.meets = rep.surjective = false;
      rep.detail = "A ∩ F is not closed for A = " + mask_label(source.set(a));
      return rep;
    }
    image[a] = *idx;
    hit[*idx] = 1;
  }
  for (std::size_t a = 0; a < source.size(); ++a) {
    for (std::size_t b = a + 1; b < source.size(); ++b) {
      if (rep.joins && image[source.join(a, b)] != target.join(image[a], image[b])) {
        rep.joins = false;
        rep.detail = "join of " + mask_label(source.set(a)) + " and " + mask_label(source.set(b)) + " not preserved";
      }
      if (rep.meets && image[source.meet(a, b)] != target.meet(image[a], image[b])) {
        rep.meets = false;
        if (rep.detail.empty()) rep.detail = "meet of " + mask_label(source.set(a)) + " and " + mask_label(source.set(b)) + " not preserved";
      }
    }
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  if (!rep.surjective && rep.detail.empty()) rep.detail = "not surjective";
  return rep;
}

}  // namespace cvxlat
