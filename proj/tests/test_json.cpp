#include <gtest/gtest.h>

#include "geocrystal/json_io.hpp"
#include "oracles.hpp"

using namespace geocrystal;

TEST(Json, FundVectorRoundTrip) {
  const auto v = build_V1(x_point(3, {parse_rational("2/3"), 5, 7, parse_rational("1/9")}));
  EXPECT_EQ(fund_vector_from_json(Json::parse(to_json(v).dump())), v);
}

TEST(Json, TorusPointSchema) {
  const auto x = x_point(2, {parse_rational("3/4"), -5});
  const auto j = to_json(x);
  EXPECT_EQ(j, Json::parse(R"({"n": 2, "x": ["3/4", "-5/1"]})"));
  EXPECT_EQ(torus_point_from_json(j), x);
  const auto y = y_point(2, {1, parse_rational("1/3")});
  EXPECT_EQ(torus_point_from_json(to_json(y)), y);
  EXPECT_EQ(torus_point_from_json(Json::parse(R"({"n": 2, "x": [3, 5]})")), x_point(2, {3, 5}));
}

TEST(Json, LatticePointSchema) {
  const auto x = lattice_point(3, {1, -2, 3, -4});
  EXPECT_EQ(to_json(x), Json::parse(R"({"n": 3, "x": [1, -2, 3, -4]})"));
  EXPECT_EQ(lattice_point_from_json(to_json(x)), x);
}

TEST(Json, CrystalEltSchema) {
  const auto b = make_elt(3, std::nullopt, {3, 1, -4}, {1, 1, -2});
  EXPECT_EQ(to_json(b), Json::parse(R"({"n": 3, "level": "inf", "b1": [3, 1, -4], "b2": [1, 1, -2]})"));
  EXPECT_EQ(crystal_elt_from_json(to_json(b)), b);
  for (const auto& e : enumerate(3, 2)) EXPECT_EQ(crystal_elt_from_json(to_json(e)), e);
}

TEST(Json, GraphRoundTrip) {
  const auto g = build_graph(2, 2);
  const auto back = crystal_graph_from_json(Json::parse(to_json(g).dump()));
  EXPECT_EQ(back.n, g.n);
  EXPECT_EQ(back.l, g.l);
  EXPECT_EQ(back.nodes, g.nodes);
  EXPECT_EQ(back.edges, g.edges);
}

TEST(Json, Reports) {
  const auto g = to_json(verify_axioms(2, 3, 42));
  EXPECT_EQ(g.at("suite"), "axioms");
  EXPECT_EQ(g.at("trials"), 3);
  EXPECT_EQ(g.at("seed"), 42);
  EXPECT_TRUE(g.at("failures").empty());

  const auto p = to_json(verify_iso(2, Region::box(1)));
  EXPECT_EQ(p.at("points"), 9);
  EXPECT_EQ(p.at("passed"), true);

  const auto perfect = to_json(perfectness_check(2, 1));
  EXPECT_EQ(perfect.at("minimal").size(), 3u);
}

TEST(Json, Malformed) {
  EXPECT_THROW(lattice_point_from_json(Json::parse(R"({"x": [1, 2]})")), ParseError);
  EXPECT_THROW(lattice_point_from_json(Json::parse(R"({"n": 2, "x": ["a", 2]})")), ParseError);
  EXPECT_THROW(torus_point_from_json(Json::parse(R"({"n": 2, "x": ["1/0", 2]})")), Error);
  EXPECT_THROW(crystal_elt_from_json(Json::parse(R"({"n": 2, "level": "big", "b1": [0, 1], "b2": [0, 1]})")),
               ParseError);
  EXPECT_THROW(crystal_elt_from_json(Json::parse(R"({"n": 2, "level": 1, "b1": [1, 1], "b2": [0, 1]})")),
               DomainError);
  EXPECT_THROW(lattice_point_from_json(Json::parse(R"({"n": 2, "x": [1, 2, 3]})")), DomainError);
}
