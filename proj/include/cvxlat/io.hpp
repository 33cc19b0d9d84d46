#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cvxlat/analysis.hpp"
#include "cvxlat/closure.hpp"
#include "cvxlat/segment_ground.hpp"
#include "cvxlat/simplex_embedding.hpp"

namespace cvxlat::io {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Rationals travel as "p/q" strings; integers are accepted on input.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const QPoint& p);
QPoint point_from_json(const Json& j);
std::vector<QPoint> points_from_json(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// {"dim", "points": [[...]], "labels"?: [...]}
struct FiniteGroundFile {
  FiniteGround ground;
  std::vector<std::string> labels;
};
FiniteGroundFile finite_ground_from_json(const Json& j);
Json to_json(const FiniteGround& x, const std::vector<std::string>& labels = {});

/// {"dim", "segments": [{"a", "b", "a_closed", "b_closed"}], "polytope"?: [[...]],
///  "sets"?: {name: [{"carrier", "t_lo", "t_hi", "lo_closed", "hi_closed"}]},
///  "triples"?: [[name, name, name]]}
struct SegmentGroundFile {
  SegmentUnionGround ground;
  std::vector<QPoint> polytope;
  std::map<std::string, SubsegmentSet> sets;
  std::vector<std::array<std::string, 3>> triples;
};
SegmentGroundFile segment_ground_from_json(const Json& j);
Json to_json(const SubsegmentSet& y);
SubsegmentSet subsegment_set_from_json(const SegmentUnionGround& x, const Json& j);

/// {"labels": [...], "leq": [[i, j], ...]}: an abstract lattice by its order.
FiniteLattice lattice_from_json(const Json& j);

/// Element labels default to the lattice's own labels.
Json to_json(const FiniteLattice& l);
std::string to_dot(const FiniteLattice& l, const std::string& name = "hasse");
std::string to_csv(const FiniteLattice& l);

Json to_json(const Witness& w, const FiniteLattice* l = nullptr);
Json to_json(const ConditionReport& r);
Json to_json(const SdvReport& r);

Json to_json(const ShrinkSchedule& s);
Json to_json(const ConstructionTable& ct);
Json to_json(const std::vector<LemmaCheck>& checks);
Json to_json(const EmbeddingReport& r);

/// Points (and optional segments) of a 2-D configuration.
std::string to_svg(const std::vector<QPoint>& points, const std::vector<std::string>& labels,
                   const std::vector<Segment>& segments = {});

}  // namespace cvxlat::io
