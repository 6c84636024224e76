#include "clusterf2/json_io.hpp"

#include "clusterf2/error.hpp"

namespace clusterf2 {

using nlohmann::json;

namespace {

constexpr std::size_t kBriefWitnesses = 10;

json diagonals_json(std::span<const Diagonal> ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(to_json(d));
  return out;
}

json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  json out = json::object();
  for (const auto& [size, count] : h) out[std::to_string(size)] = count;
  return out;
}

json points_json(const std::vector<PointX>& points, std::size_t limit) {
  json out = json::array();
  for (std::size_t k = 0; k < points.size() && k < limit; ++k) out.push_back(to_json(points[k]));
  return out;
}

json report_body(const CoverReport& r, bool verbose) {
  json j;
  j["m"] = r.m;
  j["q"] = r.q;
  j["cover_size"] = r.cover.size();
  j["total_points"] = r.total_points;
  j["covered_count"] = r.covered_count;
  j["uncovered_count"] = r.uncovered.size();
  j["covering"] = r.covering;
  j["minimal"] = r.minimal;
  j["uncovered"] = points_json(r.uncovered, verbose ? r.uncovered.size() : kBriefWitnesses);
  if (verbose) {
    json cover = json::array();
    for (const auto& t : r.cover) cover.push_back(to_json(t));
    j["cover"] = std::move(cover);
  }
  if (!r.assignment.empty()) {
    json a = json::array();
    for (const auto& pa : r.assignment) a.push_back({{"point", to_json(pa.point)}, {"members", pa.members}});
    j["assignment"] = std::move(a);
  }
  return j;
}

// Wraps nlohmann's type errors so callers see a single error family.
template <typename F>
auto parsing(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed ") + what + ": " + e.what());
  }
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) fail(ErrorCode::Parse, std::string(what) + " must be a JSON object");
}

}  // namespace

json to_json(Diagonal d) { return json::array({d.i, d.j}); }

json to_json(const Triangulation& t) {
  return {{"m", t.m()}, {"diagonals", diagonals_json(t.diagonals())}};
}

json to_json(const PointX& p) { return {{"m", p.m()}, {"q", p.q()}, {"labels", p.labels()}}; }

json to_json(const IceQuiver& q) {
  json vertices = json::array();
  for (const auto& v : q.vertices()) vertices.push_back({{"id", v.id}, {"frozen", v.frozen}});
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back(json::array({s, t}));
  return {{"vertices", std::move(vertices)}, {"arrows", std::move(arrows)}};
}

json to_json(const HexMove& mv) {
  const auto src = mv.source();
  const auto dst = mv.target();
  return {{"hexagon", mv.hexagon},
          {"kind", hex_move_kind_name(mv.kind)},
          {"axis", mv.axis},
          {"remove", diagonals_json(src)},
          {"add", diagonals_json(dst)}};
}

json to_json(const TheoremReport& r) {
  return {{"m", r.m},
          {"triangulations", r.triangulations},
          {"classes", r.classes},
          {"fibers", r.fibers},
          {"equal", r.equal},
          {"class_histogram", histogram_json(r.class_histogram)},
          {"fiber_histogram", histogram_json(r.fiber_histogram)}};
}

json to_json(const CoverReport& r, bool verbose) { return report_body(r, verbose); }

json to_json(const UpsilonCoverReport& r, bool verbose) {
  json j = report_body(r.report, verbose);
  j["expected_size"] = r.expected_size;
  j["size_matches"] = r.size_matches;
  j["composition_failures"] = r.composition_failures;
  j["ok"] = r.ok();
  return j;
}

json to_json(const CounterexampleReport& r, bool verbose) {
  json claims = json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"vertex", c.vertex},
                      {"color", c.color},
                      {"eliminated", c.eliminated},
                      {"witnessed", c.witnessed}});
  json j{{"witness", to_json(r.witness)},
         {"witness_invalid", diagonals_json(r.witness_invalid)},
         {"f2_points", r.f2_points},
         {"separated_points", r.separated_points},
         {"claims", std::move(claims)},
         {"survivors", r.survivors},
         {"cover_size", r.cover.size()},
         {"f2_covering", r.f2_report.covering},
         {"f2_covered_count", r.f2_report.covered_count},
         {"witness_uncovered", r.witness_uncovered},
         {"members_admitting_witness", r.members_admitting_witness},
         {"ok", r.ok()}};
  if (verbose) {
    json cover = json::array();
    for (const auto& t : r.cover) cover.push_back(to_json(t));
    j["cover"] = std::move(cover);
  }
  return j;
}

json classes_to_json(const std::vector<std::vector<Triangulation>>& classes) {
  json out = json::array();
  for (const auto& cls : classes) {
    json members = json::array();
    for (const auto& t : cls) members.push_back(to_json(t));
    out.push_back({{"point", to_json(f2_coloring(cls.front()))},
                   {"size", cls.size()},
                   {"members", std::move(members)}});
  }
  return out;
}

Triangulation triangulation_from_json(const json& j) {
  require_object(j, "triangulation");
  return parsing("triangulation", [&] {
    const int m = j.at("m").get<int>();
    if (m < 2 || m > kMaxPolygonM)
      fail(ErrorCode::InvalidParameter, "polygon parameter m=" + std::to_string(m) + " out of range");
    std::vector<Diagonal> ds;
    for (const auto& pair : j.at("diagonals")) {
      if (!pair.is_array() || pair.size() != 2)
        fail(ErrorCode::Parse, "a diagonal is a two-element array");
      ds.push_back(make_diagonal(m, pair[0].get<int>(), pair[1].get<int>()));
    }
    return Triangulation(m, std::move(ds));
  });
}

PointX point_from_json(const json& j) {
  require_object(j, "point");
  return parsing("point", [&] {
    return PointX(j.at("m").get<int>(), j.at("q").get<int>(), j.at("labels").get<std::vector<int>>());
  });
}

IceQuiver quiver_from_json(const json& j) {
  require_object(j, "quiver");
  return parsing("quiver", [&] {
    std::vector<QuiverVertex> vertices;
    for (const auto& v : j.at("vertices"))
      vertices.push_back({v.at("id").get<int>(), v.value("frozen", false)});
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) fail(ErrorCode::Parse, "an arrow is a two-element array");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return IceQuiver(std::move(vertices), std::move(arrows));
  });
}

std::vector<Triangulation> triangulation_list_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (j.contains("triangulations"))
      list = &j.at("triangulations");
    else if (j.contains("cover"))
      list = &j.at("cover");
    else
      fail(ErrorCode::Parse, "expected a \"triangulations\" or \"cover\" array");
  }
  if (!list->is_array()) fail(ErrorCode::Parse, "expected an array of triangulations");
  std::vector<Triangulation> out;
  for (const auto& t : *list) out.push_back(triangulation_from_json(t));
  return out;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

}  // namespace clusterf2
