#pragma once

// JSON forms shared by the C API, the CLI and the golden tests.
//
//   Triangulation: {"m": 5, "diagonals": [[0,2],[0,3],[0,4]]}
//   PointX:        {"m": 5, "q": 2, "labels": [0,2,1,2,1,2]}   (inf = q)
//   IceQuiver:     {"vertices": [{"id": 1, "frozen": false}, ...],
//                   "arrows": [[1,2],[1,2],[2,3]]}

#include <string>
#include <vector>

#include <json.hpp>

#include "clusterf2/coloring.hpp"
#include "clusterf2/covering.hpp"
#include "clusterf2/hexmoves.hpp"
#include "clusterf2/polygon.hpp"
#include "clusterf2/quiver.hpp"

namespace clusterf2 {

inline constexpr const char* kSchema = "cluster-f2/1";

nlohmann::json to_json(Diagonal d);
nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const PointX& p);
nlohmann::json to_json(const IceQuiver& q);
nlohmann::json to_json(const HexMove& mv);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const CoverReport& r, bool verbose);
nlohmann::json to_json(const UpsilonCoverReport& r, bool verbose);
nlohmann::json to_json(const CounterexampleReport& r, bool verbose);

// [{"point": ..., "size": k, "members": [...]}]
nlohmann::json classes_to_json(const std::vector<std::vector<Triangulation>>& classes);

// All parsers throw Error(Parse) on malformed input and the usual domain
// errors on invalid values.
Triangulation triangulation_from_json(const nlohmann::json& j);
PointX point_from_json(const nlohmann::json& j);
IceQuiver quiver_from_json(const nlohmann::json& j);

// Accepts a bare array of triangulations, or an object holding one under
// "triangulations" or "cover".
std::vector<Triangulation> triangulation_list_from_json(const nlohmann::json& j);

nlohmann::json parse_json_text(const std::string& text);

}  // namespace clusterf2
