#include "cvxlat/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "cvxlat/analysis.hpp"
#include "cvxlat/boolean_subm.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/errors.hpp"
#include "cvxlat/io.hpp"
#include "cvxlat/segment_ground.hpp"
#include "cvxlat/simplex_embedding.hpp"
#include "cvxlat/verify/oracles.hpp"
#include "cvxlat/verify/random.hpp"

namespace cvxlat::verify {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failed sub-checks; the first few are kept for the report line.
class Checks {
 public:
  void expect(bool cond, const std::string& what) {
    ++total_;
    if (cond) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  Outcome outcome() const {
    std::string d = info_;
    if (failed_) d += (d.empty() ? "" : " | ") + std::to_string(failed_) + "/" + std::to_string(total_) + " failed: " + notes_;
    return {failed_ == 0, d};
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string notes_, info_;
};

Outcome convex_geometry_suite(const AcceptanceOptions& opt) {
  Checks c;
  std::mt19937_64 rng(opt.seed ^ 0x11);
  std::uniform_int_distribution<std::size_t> size2(1, 8), size3(1, 6);
  const auto run = [&](std::size_t dim, std::size_t count, std::uniform_int_distribution<std::size_t>& size) {
    for (std::size_t i = 0; i < count; ++i) {
      const auto pts = random_points(rng, size(rng), dim, 3);
      const FiniteGround x(pts);
      const auto l = enumerate_closed_sets(x);
      c.expect(check_anti_exchange(l).holds, "anti-exchange, dim " + std::to_string(dim) + " instance " + std::to_string(i));
      c.expect(check_jsd(l).holds, "jsd, dim " + std::to_string(dim) + " instance " + std::to_string(i));
    }
  };
  run(2, 200, size2);
  run(3, 50, size3);
  c.note("250 grounds");
  return c.outcome();
}

Outcome collinear_counterexample(const AcceptanceOptions& opt) {
  Checks c;
  const auto file = io::finite_ground_from_json(io::read_file(opt.fixture_dir + "/four_collinear.json"));
  c.expect(file.ground.size() == 4 && affine_span_dim(file.ground.points()) == 1, "fixture is 4 collinear points");
  const auto l = enumerate_closed_sets(file.ground);
  const auto lb = check_lower_bounded(l);
  c.expect(!lb.holds, "lower bounded reported");
  c.expect(lb.witness && revalidate(l, *lb.witness), "D-cycle witness does not revalidate");
  c.expect(literal_d_cycle(l), "literal D-relation has no cycle");
  if (lb.witness) c.note("cycle of length " + std::to_string(lb.witness->elements.size()));
  return c.outcome();
}

Outcome convex_position_boolean(const AcceptanceOptions&) {
  Checks c;
  for (std::size_t k = 3; k <= 6; ++k) {
    const auto l = enumerate_closed_sets(FiniteGround(parabola_polygon(k)));
    c.expect(l.size() == (std::size_t{1} << k), std::to_string(k) + "-gon has " + std::to_string(l.size()) + " elements");
    c.expect(is_distributive(l), std::to_string(k) + "-gon not distributive");
  }
  c.note("k = 3..6");
  return c.outcome();
}

Outcome claim_join(const AcceptanceOptions&) {
  Checks c;
  std::size_t pairs = 0, samples = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto s = base_simplex(n);
    for (Mask a = 0; a <= b_top(n); ++a) {
      for (Mask b = 0; b <= b_top(n); ++b) {
        const auto r = verify_claim_join(a, b, s);
        ++pairs;
        samples += r.samples;
        c.expect(r.holds, "n=" + std::to_string(n) + " " + mask_label(a) + "," + mask_label(b) + ": " + r.offending);
      }
    }
  }
  c.note(std::to_string(pairs) + " pairs, " + std::to_string(samples) + " samples");
  return c.outcome();
}

Outcome embedding(const AcceptanceOptions&) {
  Checks c;
  for (std::size_t n = 1; n <= 2; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const auto ct = build_table(n);
    std::vector<GroundLabel> labels;
    const auto x = ground_set(ct, &labels);
    c.expect(x.size() == (n == 1 ? 3U : 10U), tag + "|X| = " + std::to_string(x.size()));
    for (const auto& l : verify_lemmas(ct)) c.expect(l.holds, tag + l.lemma + " " + l.offending);
    const auto r = build_embedding(ct);
    c.expect(r.embedding_verified(), tag + "embedding not verified");
    std::string cycle;
    if (r.d_cycle) {
      // The cycle's join-irreducibles are singletons of X.
      const auto target = enumerate_closed_sets(x);
      for (const auto& [role, idx] : r.d_cycle->elements) {
        for (const auto i : mask_members(target.set(idx))) cycle += (cycle.empty() ? "" : " D ") + labels[i].text();
      }
    }
    c.expect(r.lower_bounded, tag + "target lattice has a D-cycle " + cycle);
    c.note(tag + "|X|=" + std::to_string(r.ground_size) + " target " + std::to_string(r.target_size) +
           (r.embedding_verified() ? " embedding ok" : " embedding defect") + (r.lower_bounded ? " lb" : " not lb"));
  }
  return c.outcome();
}

io::SegmentGroundFile load_pm(const AcceptanceOptions& opt) { return io::segment_ground_from_json(io::read_file(opt.fixture_dir + "/pm.json")); }

Outcome example_pm(const AcceptanceOptions& opt) {
  Checks c;
  const auto f = load_pm(opt);
  const auto& x = f.ground;
  const auto &a = f.sets.at("A"), &b = f.sets.at("B"), &cc = f.sets.at("C");
  auto x_minus_apex = whole(x);
  const QPoint apex = x.segment(1).b();
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (auto& iv : x_minus_apex.pieces[k]) {
      if (x.segment(k).point_at(iv.hi) == apex) iv.hi_closed = false;
      if (x.segment(k).point_at(iv.lo) == apex) iv.lo_closed = false;
    }
  }
  const auto ab = seg_join(x, a, b), ac = seg_join(x, a, cc);
  c.expect(ab == x_minus_apex, "A∨B = " + to_string(ab));
  c.expect(ac == x_minus_apex, "A∨C = " + to_string(ac));
  c.expect(seg_join(x, a, seg_meet(x, b, cc)) == a, "A∨(B∧C) != A");
  const auto rep = sdv_spot_check(x, {SdvTriple{a, b, cc}});
  c.expect(!rep.holds && rep.violation, "no violation reported");
  return c.outcome();
}

Outcome conditions(const AcceptanceOptions& opt) {
  Checks c;
  const auto pm = load_pm(opt);
  c.expect(!check_condition_disjoint(pm.ground).holds, "PM passes (i)");
  c.expect(!check_condition_faces(pm.ground, VPolytope::from_points(pm.polytope)).holds, "PM passes (ii)");
  const auto disjoint = io::segment_ground_from_json(io::read_file(opt.fixture_dir + "/disjoint_segments.json"));
  c.expect(check_condition_disjoint(disjoint.ground).holds, "disjoint fixture fails (i)");
  const auto edges = io::segment_ground_from_json(io::read_file(opt.fixture_dir + "/triangle_edges.json"));
  c.expect(check_condition_faces(edges.ground, VPolytope::from_points(edges.polytope)).holds, "triangle edges fail (ii)");
  return c.outcome();
}

std::vector<VPolytope> sample_polytopes() {
  return {VPolytope::from_points({QPoint{0, 0}, QPoint{4, 0}, QPoint{0, 4}}),
          VPolytope::from_points({QPoint{0, 0}, QPoint{2, 0}, QPoint{2, 2}, QPoint{0, 2}}),
          VPolytope::from_points({QPoint{0, 0}, QPoint{3, 0}, QPoint{4, 2}, QPoint{1, 3}, QPoint{-1, 2}}),
          VPolytope::from_points({QPoint{0, 0, 0}, QPoint{2, 0, 0}, QPoint{0, 2, 0}, QPoint{0, 0, 2}})};
}

Outcome face_restriction(const AcceptanceOptions& opt) {
  Checks c;
  std::mt19937_64 rng(opt.seed ^ 0x88);
  const auto polys = sample_polytopes();
  std::uniform_int_distribution<std::size_t> pick_poly(0, polys.size() - 1), count(1, 6);
  std::uniform_int_distribution<long> den(1, 4);
  for (int i = 0; i < 100; ++i) {
    const auto& p = polys[pick_poly(rng)];
    std::vector<Face> proper;
    for (const auto& f : faces(p)) {
      if (f.vertices.size() < p.vertices().size()) proper.push_back(f);
    }
    const auto& f = proper[std::uniform_int_distribution<std::size_t>(0, proper.size() - 1)(rng)];
    const auto fp = face_points(p, f);
    std::vector<QPoint> y;
    const auto k = count(rng);
    for (std::size_t j = 0; j < k; ++j) {
      const bool on_face = j % 3 == 0;
      auto q = random_in_hull(rng, on_face ? fp : p.vertices(), den(rng));
      if (std::find(y.begin(), y.end(), q) == y.end()) y.push_back(std::move(q));
    }
    c.expect(face_restriction_check(y, p, f).holds, "instance " + std::to_string(i));
  }
  std::size_t hom = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& p = polys[i % 3];
    const Face edge{{0, 1}};
    const auto fp = face_points(p, edge);
    std::vector<QPoint> pts;
    for (std::size_t j = 0; j < 7; ++j) {
      auto q = random_in_hull(rng, j % 2 ? fp : p.vertices(), den(rng));
      if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(std::move(q));
    }
    const auto r = face_homomorphism_check(FiniteGround(pts), p, edge);
    c.expect(r.holds(), "ground " + std::to_string(i) + ": " + r.detail);
    hom += r.holds();
  }
  c.note("100 restrictions, " + std::to_string(hom) + "/20 surjective homomorphisms");
  return c.outcome();
}

Outcome oracle_equivalence(const AcceptanceOptions& opt) {
  Checks c;
  std::mt19937_64 rng(opt.seed ^ 0x99);
  std::uniform_int_distribution<std::size_t> size(4, 12);
  for (int i = 0; i < 30; ++i) {
    const auto pts = random_points(rng, size(rng), 2, 3);
    const auto l = enumerate_closed_sets(FiniteGround(pts));
    auto fast = l.sets();
    std::sort(fast.begin(), fast.end());
    c.expect(fast == brute_closed_sets(pts), "closed sets differ on ground " + std::to_string(i));
  }
  std::uniform_int_distribution<std::size_t> dim(1, 3), ysize(1, 5);
  for (int i = 0; i < 100; ++i) {
    const auto d = dim(rng);
    const auto y = random_points(rng, ysize(rng), d, 3);
    const auto q = random_points(rng, 1, d, 3, 2)[0];
    c.expect(hull_member(q, y) == hull_oracle(q, y), "hull membership differs on instance " + std::to_string(i));
  }
  c.note("30 grounds, 100 hull queries");
  return c.outcome();
}

struct Spec {
  int id;
  const char* name;
  double budget;
  Outcome (*run)(const AcceptanceOptions&);
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s{
      {1, "convex-geometry-suite", 120, convex_geometry_suite},
      {2, "collinear-not-lower-bounded", 1, collinear_counterexample},
      {3, "convex-position-boolean", 5, convex_position_boolean},
      {4, "claim-join", 120, claim_join},
      {5, "simplex-embedding", 300, embedding},
      {6, "segment-example-sdv", 1, example_pm},
      {7, "sufficient-conditions", 1, conditions},
      {8, "face-restriction", 120, face_restriction},
      {9, "oracle-equivalence", 180, oracle_equivalence},
  };
  return s;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> out;
  for (const auto& s : specs()) out.push_back(s.id);
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<CriterionResult> out;
  for (const auto& s : specs()) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), s.id) == opt.only.end()) continue;
    CriterionResult r{s.id, s.name, false, "", 0, s.budget};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto o = s.run(opt);
      r.pass = o.ok;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && r.seconds > r.budget_seconds) {
      r.pass = false;
      r.detail += " | over time budget";
    }
    if (report) report(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.2f s, budget %.0f s)", r.seconds, r.budget_seconds);
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  " << buf;
  if (!r.detail.empty()) out << "  " << r.detail;
  return out.str();
}

}  // namespace cvxlat::verify
