#include <doctest.h>

#include "clusterf2/error.hpp"
#include "clusterf2/json_io.hpp"
#include "support.hpp"

using namespace clusterf2;
using nlohmann::json;

namespace {

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("triangulation round trip") {
  for (const auto& t : enumerate_triangulations(6)) CHECK(triangulation_from_json(to_json(t)) == t);
  const auto j = to_json(support::tri(5, {{0, 2}, {0, 3}, {0, 4}}));
  CHECK(j.dump() == R"({"diagonals":[[0,2],[0,3],[0,4]],"m":5})");
  // Reversed pairs are normalized on input.
  CHECK(triangulation_from_json(json::parse(R"({"m":3,"diagonals":[[3,1]]})")) ==
        support::tri(3, {{1, 3}}));
}

TEST_CASE("point round trip") {
  const PointX p(5, 2, {0, 2, 1, 2, 1, 2});
  CHECK(to_json(p).dump() == R"({"labels":[0,2,1,2,1,2],"m":5,"q":2})");
  for (const auto& y : enumerate_points(5, 3)) CHECK(point_from_json(to_json(y)) == y);
}

TEST_CASE("quiver round trip") {
  for (auto type : {DynkinType::A, DynkinType::D, DynkinType::E}) {
    const int rank = type == DynkinType::A ? 1 : (type == DynkinType::D ? 5 : 8);
    const auto q = dynkin_quiver(type, rank);
    CHECK(quiver_from_json(to_json(q)) == q);
  }
  // Multiplicity survives as repeated arrows; frozen defaults to false.
  const auto q = quiver_from_json(json::parse(R"({"vertices":[{"id":1},{"id":2},{"id":3,"frozen":true}],
                                                 "arrows":[[1,2],[1,2],[2,3]]})"));
  CHECK(q.arrows().size() == 3);
  CHECK(q.mutable_count() == 2);
  CHECK(q.frozen_count() == 1);
}

TEST_CASE("malformed input raises parse errors") {
  CHECK(code_of([] { parse_json_text("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { triangulation_from_json(json::array()); }) == ErrorCode::Parse);
  CHECK(code_of([] { triangulation_from_json(json::parse(R"({"m":5})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { triangulation_from_json(json::parse(R"({"m":"5","diagonals":[]})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { triangulation_from_json(json::parse(R"({"m":3,"diagonals":[[1,3,4]]})")); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { point_from_json(json::parse(R"({"m":3,"q":2})")); }) == ErrorCode::Parse);
  CHECK(code_of([] { quiver_from_json(json::parse(R"({"vertices":[{"id":1}],"arrows":[[1]]})")); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { triangulation_list_from_json(json::parse(R"({"foo":[]})")); }) == ErrorCode::Parse);
  // Well-formed but invalid values keep their domain codes.
  CHECK(code_of([] { triangulation_from_json(json::parse(R"({"m":5,"diagonals":[[0,2],[1,3],[0,4]]})")); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { point_from_json(json::parse(R"({"m":3,"q":2,"labels":[0,0,1,2]})")); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("triangulation lists in three shapes") {
  const auto all = enumerate_triangulations(4);
  json arr = json::array();
  for (const auto& t : all) arr.push_back(to_json(t));
  CHECK(triangulation_list_from_json(arr) == all);
  CHECK(triangulation_list_from_json(json{{"triangulations", arr}}) == all);
  CHECK(triangulation_list_from_json(json{{"cover", arr}}) == all);
}

TEST_CASE("report shapes") {
  const auto up = to_json(upsilon_cover(5, 2), false);
  for (const char* key : {"m", "q", "cover_size", "total_points", "covered_count", "uncovered_count", "covering",
                          "minimal", "uncovered", "expected_size", "size_matches", "composition_failures", "ok"})
    CHECK(up.contains(key));
  CHECK_FALSE(up.contains("cover"));
  CHECK(up["cover_size"] == 10);
  CHECK(up["ok"] == true);
  const auto upv = to_json(upsilon_cover(5, 2, true), true);
  CHECK(upv["cover"].size() == 10);
  CHECK(upv.contains("assignment"));
  // The verbose cover feeds back into the list parser.
  CHECK(triangulation_list_from_json(upv).size() == 10);

  const auto th = to_json(verify_theorem_main(5));
  CHECK(th["equal"] == true);
  CHECK(th["class_histogram"] == json{{"1", 6}, {"2", 4}});

  const auto ce = to_json(counterexample_cover(3), false);
  CHECK(ce["ok"] == true);
  CHECK(ce["f2_points"] == 682);
  CHECK(ce["witness_invalid"].size() == 12);
  CHECK_FALSE(ce.contains("cover"));

  const auto cls = classes_to_json(hex_classes(5));
  CHECK(cls.size() == 10);
  std::size_t members = 0;
  for (const auto& c : cls) members += c["size"].get<std::size_t>();
  CHECK(members == 14);
}

TEST_CASE("hex move JSON") {
  const auto t = support::tri(5, {{0, 2}, {2, 5}, {3, 5}});
  const auto j = to_json(find_hex_moves(t).front());
  CHECK(j["hexagon"] == json{0, 1, 2, 3, 4, 5});
  CHECK(j["remove"] == json{{0, 2}, {2, 5}, {3, 5}});
  CHECK(j["add"].size() == 3);
}
