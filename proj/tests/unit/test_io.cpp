#include <gtest/gtest.h>

#include "cvxlat/errors.hpp"
#include "cvxlat/io.hpp"
#include "support.hpp"

using namespace cvxlat;
using namespace cvxlat::testing;
using io::Json;

TEST(IoRational, RoundTrip) {
  EXPECT_EQ(io::to_json(R(-3, 6)), Json("-1/2"));
  EXPECT_EQ(io::rat_from_json(Json("6/4")), R(3, 2));
  EXPECT_EQ(io::rat_from_json(Json(7)), R(7));
  EXPECT_THROW(io::rat_from_json(Json(0.5)), InputError);
  EXPECT_EQ(io::point_from_json(io::to_json(P({R(1, 3), 2}))), P({R(1, 3), 2}));
}

TEST(IoGround, ParseAndDimension) {
  const auto j = Json::parse(R"({"dim": 2, "points": [["0", "0"], [1, "1/2"]], "labels": ["u", "w"]})");
  const auto f = io::finite_ground_from_json(j);
  EXPECT_EQ(f.ground.size(), 2U);
  EXPECT_EQ(f.labels[1], "w");
  EXPECT_THROW(io::finite_ground_from_json(Json::parse(R"({"dim": 3, "points": [["0", "0"]]})")), InputError);
  EXPECT_THROW(io::finite_ground_from_json(Json::parse(R"({"points": [["0", "0"], ["0", "0"]]})")), InputError);
  EXPECT_EQ(io::to_json(f.ground).at("schema_version"), io::kSchemaVersion);
}

TEST(IoSegments, SetsAndTriples) {
  const auto j = Json::parse(R"({
    "segments": [{"a": [0, 0], "b": [2, 0]}, {"a": [1, 0], "b": [1, 2], "a_closed": false}],
    "sets": {"S": [{"carrier": 0, "t_lo": "1/2", "t_hi": "1/2"}]},
    "triples": [["S", "S", "S"]]})");
  const auto f = io::segment_ground_from_json(j);
  EXPECT_EQ(f.ground.size(), 2U);
  // (1,0) is excluded from carrier 1, so the point stays on carrier 0 only.
  EXPECT_TRUE(f.sets.at("S").pieces[1].empty());
  EXPECT_EQ(f.triples.size(), 1U);
  const auto back = io::subsegment_set_from_json(f.ground, io::to_json(f.sets.at("S")));
  EXPECT_EQ(back, f.sets.at("S"));
  EXPECT_THROW(io::segment_ground_from_json(Json::parse(R"({"segments": [{"a": [0, 0], "b": [1, 0]}], "triples": [["X", "X", "X"]]})")),
               InputError);
}

TEST(IoLattice, JsonDotCsv) {
  const auto l = io::lattice_from_json(Json::parse(R"({"labels": ["0", "a", "1"], "leq": [[0, 1], [1, 2]]})"));
  EXPECT_EQ(l.size(), 3U);
  const auto j = io::to_json(l);
  EXPECT_EQ(j.at("covers").size(), 2U);
  const auto dot = io::to_dot(l);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
  EXPECT_EQ(io::to_csv(l).substr(0, 5), "index");
  EXPECT_THROW(io::lattice_from_json(Json::parse(R"({"labels": ["a", "b"], "leq": []})")), InputError);
}

TEST(IoSvg, TwoDimensionalOnly) {
  const auto svg = io::to_svg({P({0, 0}), P({1, 1})}, {"u", "w"});
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_THROW(io::to_svg({P({0, 0, 0})}, {}), InputError);
}

TEST(IoEmbedding, Deterministic) {
  const auto a = io::to_json(build_embedding(build_table(1))).dump();
  const auto b = io::to_json(build_embedding(build_table(1))).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(io::to_json(build_table(2)).at("schedule").at("shrink")[1], Json("1/4"));
}
