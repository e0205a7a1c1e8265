#pragma once

// JSON forms of the library's values and reports.

#include <json.hpp>

#include "geocrystal/expr.hpp"
#include "geocrystal/fundrep.hpp"
#include "geocrystal/geom.hpp"
#include "geocrystal/pcrystal.hpp"
#include "geocrystal/udiso.hpp"

namespace geocrystal {

using Json = nlohmann::json;

Json to_json(const FundVector<Rational>& v);
Json to_json(const FundVector<PosExpr>& v);
FundVector<Rational> fund_vector_from_json(const Json& j);

/// {"n": int, "x": ["p/q", ...]}; y-chart points use the key "y".
Json to_json(const TorusPoint& p);
TorusPoint torus_point_from_json(const Json& j);

/// {"n": int, "x": [int, ...]}
Json to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const Json& j);

/// {"n": int, "level": int | "inf", "b1": [...], "b2": [...]}
Json to_json(const CrystalElt& b);
CrystalElt crystal_elt_from_json(const Json& j);

Json to_json(const GeomReport& r);
Json to_json(const PLCrystalReport& r);
Json to_json(const CrystalReport& r);
Json to_json(const PerfectnessReport& r);
Json to_json(const BoxComparison& r);

Json to_json(const CrystalGraph& g);
CrystalGraph crystal_graph_from_json(const Json& j);

}  // namespace geocrystal
