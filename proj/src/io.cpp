#include "cvxlat/io.hpp"

#include <fstream>
#include <sstream>

#include "cvxlat/errors.hpp"
#include "cvxlat/rational.hpp"

namespace cvxlat::io {

Json to_json(const Rat& r) { return format_rat(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return make_rat(j.get<long>());
  throw InputError("expected a rational \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const QPoint& p) {
  Json out = Json::array();
  for (std::size_t c = 0; c < p.dim(); ++c) out.push_back(to_json(p[c]));
  return out;
}

QPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty coordinate array, got " + j.dump());
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return QPoint(std::move(c));
}

std::vector<QPoint> points_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of points");
  std::vector<QPoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void check_dim(const Json& j, const std::vector<QPoint>& pts) {
  if (!j.contains("dim")) return;
  const auto d = j.at("dim").get<std::size_t>();
  for (const auto& p : pts) {
    if (p.dim() != d) throw InputError("point " + to_string(p) + " does not have dimension " + std::to_string(d));
  }
}

Json with_schema(Json body) {
  Json out{{"schema_version", kSchemaVersion}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

}  // namespace

FiniteGroundFile finite_ground_from_json(const Json& j) {
  auto pts = points_from_json(field(j, "points"));
  check_dim(j, pts);
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (!labels.empty() && labels.size() != pts.size()) throw InputError("labels and points differ in number");
  return FiniteGroundFile{FiniteGround(std::move(pts)), std::move(labels)};
}

Json to_json(const FiniteGround& x, const std::vector<std::string>& labels) {
  Json pts = Json::array();
  for (const auto& p : x.points()) pts.push_back(to_json(p));
  Json out = with_schema({{"dim", x.dim()}, {"points", pts}});
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

Json to_json(const SubsegmentSet& y) {
  Json out = Json::array();
  for (std::size_t k = 0; k < y.pieces.size(); ++k) {
    for (const auto& iv : y.pieces[k]) {
      out.push_back({{"carrier", k},
                     {"t_lo", to_json(iv.lo)},
                     {"t_hi", to_json(iv.hi)},
                     {"lo_closed", iv.lo_closed},
                     {"hi_closed", iv.hi_closed}});
    }
  }
  return out;
}

SubsegmentSet subsegment_set_from_json(const SegmentUnionGround& x, const Json& j) {
  if (!j.is_array()) throw InputError("a subsegment set is an array of intervals");
  auto y = empty_set(x);
  for (const auto& piece : j) {
    const auto k = field(piece, "carrier").get<std::size_t>();
    if (k >= x.size()) throw InputError("carrier index " + std::to_string(k) + " out of range");
    y.pieces[k].push_back(Interval{rat_from_json(field(piece, "t_lo")), rat_from_json(field(piece, "t_hi")),
                                   piece.value("lo_closed", true), piece.value("hi_closed", true)});
  }
  return canonicalize(x, y);
}

SegmentGroundFile segment_ground_from_json(const Json& j) {
  std::vector<Segment> segs;
  for (const auto& s : field(j, "segments")) {
    segs.emplace_back(point_from_json(field(s, "a")), point_from_json(field(s, "b")), s.value("a_closed", true),
                      s.value("b_closed", true));
  }
  std::vector<QPoint> ends;
  for (const auto& s : segs) {
    ends.push_back(s.a());
    ends.push_back(s.b());
  }
  check_dim(j, ends);
  SegmentGroundFile out{SegmentUnionGround(std::move(segs)), {}, {}, {}};
  if (j.contains("polytope")) out.polytope = points_from_json(j.at("polytope"));
  if (j.contains("sets")) {
    for (const auto& [name, v] : j.at("sets").items()) out.sets.emplace(name, subsegment_set_from_json(out.ground, v));
  }
  if (j.contains("triples")) {
    for (const auto& t : j.at("triples")) {
      const auto names = t.get<std::vector<std::string>>();
      if (names.size() != 3) throw InputError("a triple names three sets");
      for (const auto& n : names) {
        if (!out.sets.count(n)) throw InputError("unknown set \"" + n + "\" in triple");
      }
      out.triples.push_back({names[0], names[1], names[2]});
    }
  }
  return out;
}

FiniteLattice lattice_from_json(const Json& j) {
  const auto labels = field(j, "labels").get<std::vector<std::string>>();
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (const auto& e : field(j, "leq")) {
    if (!e.is_array() || e.size() != 2) throw InputError("order pairs are [i, j]");
    leq.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return FiniteLattice::from_leq(labels, leq);
}

Json to_json(const FiniteLattice& l) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    Json e{{"index", i}, {"label", l.label(i)}};
    if (l.has_sets()) e["members"] = mask_members(l.set(i));
    elements.push_back(std::move(e));
  }
  Json covers = Json::array();
  for (const auto& [a, b] : l.covers()) covers.push_back({a, b});
  return with_schema({{"size", l.size()},
                      {"bottom", l.bottom()},
                      {"top", l.top()},
                      {"elements", elements},
                      {"covers", covers},
                      {"join_irreducibles", l.join_irreducibles()},
                      {"atoms", l.atoms()}});
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FiniteLattice& l, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < l.size(); ++i) out << "  n" << i << " [label=\"" << dot_escape(l.label(i)) << "\"];\n";
  for (const auto& [a, b] : l.covers()) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string to_csv(const FiniteLattice& l) {
  std::ostringstream out;
  out << "index,label,lower_covers,upper_covers\n";
  const auto join_ids = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (const auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  for (std::size_t i = 0; i < l.size(); ++i) {
    out << i << ",\"" << l.label(i) << "\"," << join_ids(l.lower_covers(i)) << "," << join_ids(l.upper_covers(i)) << "\n";
  }
  return out.str();
}

Json to_json(const Witness& w, const FiniteLattice* l) {
  Json elems = Json::array();
  const bool ground_roles = w.kind == WitnessKind::anti_exchange_violation;
  for (const auto& [role, idx] : w.elements) {
    Json e{{"role", role}, {"index", idx}};
    if (l && !(ground_roles && role != "A") && idx < l->size()) e["label"] = l->label(idx);
    elems.push_back(std::move(e));
  }
  return Json{{"kind", to_string(w.kind)}, {"elements", elems}, {"detail", w.detail}};
}

Json to_json(const ConditionReport& r) {
  return Json{{"holds", r.holds}, {"offending", r.offending}, {"detail", r.detail}};
}

Json to_json(const SdvReport& r) {
  Json out{{"holds", r.holds}, {"checked", r.checked}, {"premises", r.premises}};
  if (r.violation) out["violation"] = {{"A", to_json(r.violation->a)}, {"B", to_json(r.violation->b)}, {"C", to_json(r.violation->c)}};
  return out;
}

Json to_json(const ShrinkSchedule& s) {
  Json shrink = Json::array(), ratio = Json::array();
  for (std::size_t k = 0; k < s.shrink.size(); ++k) {
    shrink.push_back(to_json(s.shrink[k]));
    ratio.push_back(to_json(s.ratio(k)));
  }
  return Json{{"n", s.n}, {"shrink", shrink}, {"ratio", ratio}};
}

Json to_json(const ConstructionTable& ct) {
  Json simplex = Json::array();
  for (const auto& p : ct.simplex.vertices()) simplex.push_back(to_json(p));
  Json polys = Json::array();
  for (const auto& [a, pts] : ct.shrunken) {
    Json v = Json::array();
    for (const auto& p : pts) v.push_back(to_json(p));
    polys.push_back({{"A", mask_members(a)}, {"level", ct.level(a)}, {"vertices", v}});
  }
  return with_schema({{"n", ct.n}, {"simplex", simplex}, {"schedule", to_json(ct.schedule)}, {"v", to_json(ct.v)}, {"P", polys}});
}

Json to_json(const std::vector<LemmaCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back({{"check", c.lemma}, {"cases", c.cases}, {"holds", c.holds}, {"offending", c.offending}});
  return out;
}

Json to_json(const EmbeddingReport& r) {
  Json carriers = Json::array();
  for (const auto t : r.carriers) carriers.push_back(mask_members(t));
  Json image = Json::array();
  for (const auto& [fam, set] : r.image) {
    Json f = Json::array();
    for (const auto t : mask_members(fam)) f.push_back(mask_members(static_cast<Mask>(t)));
    image.push_back({{"family", f}, {"closed_set", mask_members(set)}});
  }
  Json out{{"n", r.n},
           {"ground_size", r.ground_size},
           {"source_size", r.source_size},
           {"full_source_size", r.full_source_size},
           {"target_size", r.target_size},
           {"embedding_verified", r.embedding_verified()},
           {"injective", r.injective},
           {"meet_preserving", r.meet_preserving},
           {"join_preserving", r.join_preserving},
           {"full_homomorphism", r.full_homomorphism},
           {"full_injective", r.full_injective},
           {"carriers_agree", r.carriers_agree},
           {"lower_bounded", r.lower_bounded},
           {"carriers", carriers},
           {"image", image}};
  if (r.defect) out["defect"] = to_json(*r.defect);
  if (r.d_cycle) out["d_cycle"] = to_json(*r.d_cycle);
  return out;
}

std::string to_svg(const std::vector<QPoint>& points, const std::vector<std::string>& labels,
                   const std::vector<Segment>& segments) {
  std::vector<QPoint> all = points;
  for (const auto& s : segments) {
    all.push_back(s.a());
    all.push_back(s.b());
  }
  for (const auto& p : all) {
    if (p.dim() != 2) throw InputError("SVG output needs 2-D points");
  }
  if (all.empty()) throw InputError("nothing to draw");
  double xmin = all[0][0].get_d(), xmax = xmin, ymin = all[0][1].get_d(), ymax = ymin;
  for (const auto& p : all) {
    xmin = std::min(xmin, p[0].get_d());
    xmax = std::max(xmax, p[0].get_d());
    ymin = std::min(ymin, p[1].get_d());
    ymax = std::max(ymax, p[1].get_d());
  }
  const double size = 400, margin = 40;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const auto sx = [&](const QPoint& p) { return margin + (p[0].get_d() - xmin) / span * size; };
  const auto sy = [&](const QPoint& p) { return margin + (ymax - p[1].get_d()) / span * size; };
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\"" << size + 2 * margin
      << "\">\n";
  for (const auto& s : segments) {
    out << "  <line x1=\"" << sx(s.a()) << "\" y1=\"" << sy(s.a()) << "\" x2=\"" << sx(s.b()) << "\" y2=\"" << sy(s.b())
        << "\" stroke=\"black\"/>\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "  <circle cx=\"" << sx(points[i]) << "\" cy=\"" << sy(points[i]) << "\" r=\"3\"/>\n";
    if (i < labels.size()) {
      out << "  <text x=\"" << sx(points[i]) + 5 << "\" y=\"" << sy(points[i]) - 5 << "\" font-size=\"10\">" << labels[i]
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cvxlat::io
