#include "geocrystal/json_io.hpp"

namespace geocrystal {

namespace {

template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

int read_rank(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  return n;
}

Rational read_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

template <class S, class Fmt>
Json vector_json(const FundVector<S>& v, Fmt fmt) {
  Json coeffs = Json::array();
  for (const auto& [label, value] : v.coeffs())
    coeffs.push_back({{"i", label.i}, {"j", label.j}, {"value", fmt(value)}});
  return {{"n", v.n()}, {"coeffs", coeffs}};
}

}  // namespace

Json to_json(const FundVector<Rational>& v) {
  return vector_json(v, [](const Rational& r) { return format_rational(r); });
}

Json to_json(const FundVector<PosExpr>& v) {
  return vector_json(v, [](const PosExpr& e) { return to_string(e); });
}

FundVector<Rational> fund_vector_from_json(const Json& j) {
  return guarded([&] {
    FundVector<Rational> v(read_rank(j));
    for (const auto& c : j.at("coeffs"))
      v.add({c.at("i").get<int>(), c.at("j").get<int>()}, read_rational(c.at("value")));
    return v;
  });
}

Json to_json(const TorusPoint& p) {
  Json coords = Json::array();
  for (const auto& r : p.coords) coords.push_back(format_rational(r));
  return {{"n", p.n}, {p.first == 1 ? "y" : "x", coords}};
}

TorusPoint torus_point_from_json(const Json& j) {
  return guarded([&] {
    const int n = read_rank(j);
    const bool y = j.contains("y");
    std::vector<Rational> coords;
    for (const auto& v : j.at(y ? "y" : "x")) coords.push_back(read_rational(v));
    return y ? y_point(n, std::move(coords)) : x_point(n, std::move(coords));
  });
}

Json to_json(const LatticePoint& p) { return {{"n", p.n}, {"x", p.coords}}; }

LatticePoint lattice_point_from_json(const Json& j) {
  return guarded([&] {
    return lattice_point(read_rank(j), j.at("x").get<std::vector<std::int64_t>>());
  });
}

Json to_json(const CrystalElt& b) {
  Json level = b.level ? Json(*b.level) : Json("inf");
  return {{"n", b.n}, {"level", level}, {"b1", b.b1}, {"b2", b.b2}};
}

CrystalElt crystal_elt_from_json(const Json& j) {
  return guarded([&] {
    const int n = read_rank(j);
    const auto& lv = j.at("level");
    std::optional<int> level;
    if (lv.is_string()) {
      if (lv.get<std::string>() != "inf") throw ParseError("level must be an integer or \"inf\"");
    } else {
      level = lv.get<int>();
    }
    return make_elt(n, level, j.at("b1").get<std::vector<std::int64_t>>(),
                    j.at("b2").get<std::vector<std::int64_t>>());
  });
}

Json to_json(const GeomReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json params = Json::object();
    for (const auto& [name, value] : f.params) params[name] = format_rational(value);
    failures.push_back({{"identity", f.identity}, {"point", to_json(f.point)}, {"params", params}});
  }
  return {{"suite", r.suite},   {"n", r.n},           {"trials", r.trials}, {"seed", r.seed},
          {"checks", r.checks}, {"passed", r.passed()}, {"failures", failures}};
}

Json to_json(const PLCrystalReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item{{"identity", f.identity}, {"point", to_json(f.point)}, {"i", f.node}};
    if (f.c) item["c"] = *f.c;
    failures.push_back(item);
  }
  return {{"suite", r.suite},   {"n", r.n},           {"region", r.region.describe()},
          {"points", r.points}, {"checks", r.checks}, {"passed", r.passed()},
          {"failures", failures}};
}

Json to_json(const CrystalReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"identity", f.identity}, {"element", to_json(f.elt)}, {"k", f.k}});
  return {{"n", r.n},
          {"level", r.level ? Json(*r.level) : Json("inf")},
          {"elements", r.elements},
          {"checks", r.checks},
          {"passed", r.passed()},
          {"failures", failures}};
}

Json to_json(const PerfectnessReport& r) {
  Json minimal = Json::array();
  for (const auto& b : r.minimal) minimal.push_back(to_json(b));
  return {{"n", r.n},
          {"l", r.l},
          {"elements", r.elements},
          {"min_level", r.min_level},
          {"minimal_elements", r.minimal_elements},
          {"dominant_weights", r.dominant_weights},
          {"eps_bijective", r.eps_bijective},
          {"phi_bijective", r.phi_bijective},
          {"strings_ok", r.strings_ok},
          {"passed", r.passed()},
          {"minimal", minimal}};
}

Json to_json(const BoxComparison& r) {
  Json out{{"equal", r.equal}, {"points_checked", r.points_checked}};
  if (r.counterexample) {
    Json point = Json::object();
    for (const auto& [name, value] : *r.counterexample) point[name] = value;
    out["counterexample"] = point;
  }
  return out;
}

Json to_json(const CrystalGraph& g) {
  Json nodes = Json::array();
  for (const auto& b : g.nodes) nodes.push_back(to_json(b));
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"source", e.source}, {"target", e.target}, {"color", e.color}});
  return {{"n", g.n}, {"l", g.l}, {"nodes", nodes}, {"edges", edges}};
}

CrystalGraph crystal_graph_from_json(const Json& j) {
  return guarded([&] {
    CrystalGraph g{read_rank(j), j.at("l").get<int>(), {}, {}};
    for (const auto& b : j.at("nodes")) g.nodes.push_back(crystal_elt_from_json(b));
    for (const auto& e : j.at("edges")) {
      CrystalEdge edge{e.at("source").get<std::size_t>(), e.at("target").get<std::size_t>(),
                       e.at("color").get<int>()};
      if (edge.source >= g.nodes.size() || edge.target >= g.nodes.size())
        throw ParseError("edge endpoint out of range");
      g.edges.push_back(edge);
    }
    return g;
  });
}

}  // namespace geocrystal
