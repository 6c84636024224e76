// Talks to the shared library only through the C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "clusterf2/clusterf2.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cf2_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(cf2_version()) == "1.0.0");
  CHECK(std::string(cf2_status_name(CF2_OK)) == "ok");
  CHECK(std::string(cf2_status_name(CF2_NOT_ACYCLIC)) == "not-acyclic");
  CHECK(std::string(cf2_status_name(static_cast<cf2_status>(99))) == "unknown");
}

TEST_CASE("triangulation handles") {
  const int pairs[] = {0, 4, 1, 4, 3, 1};
  cf2_triangulation* t = nullptr;
  REQUIRE(cf2_triangulation_create(5, pairs, 3, &t) == CF2_OK);
  CHECK(cf2_triangulation_m(t) == 5);
  CHECK(cf2_triangulation_diagonal_count(t) == 3);
  int i = 0, j = 0;
  REQUIRE(cf2_triangulation_diagonal(t, 1, &i, &j) == CF2_OK);
  CHECK(i == 1);
  CHECK(j == 3);
  CHECK(cf2_triangulation_diagonal(t, 3, &i, &j) == CF2_INVALID_ARGUMENT);

  char* s = nullptr;
  REQUIRE(cf2_triangulation_to_json(t, &s) == CF2_OK);
  const auto text = take(s);
  cf2_triangulation* back = nullptr;
  REQUIRE(cf2_triangulation_from_json(text.c_str(), &back) == CF2_OK);
  CHECK(cf2_triangulation_equal(t, back));

  cf2_triangulation* f = nullptr;
  REQUIRE(cf2_triangulation_flip(t, 4, 0, &f) == CF2_OK);
  CHECK_FALSE(cf2_triangulation_equal(t, f));

  int fan = -1;
  REQUIRE(cf2_triangulation_is_fan(t, &fan) == CF2_OK);
  CHECK(fan == 0);

  cf2_quiver* q = nullptr;
  REQUIRE(cf2_triangulation_quiver(t, &q) == CF2_OK);
  CHECK(cf2_quiver_mutable_count(q) == 3);
  CHECK(cf2_quiver_frozen_count(q) == 1);
  char* count = nullptr;
  REQUIRE(cf2_count_recursive(q, &count) == CF2_OK);
  CHECK(take(count) == "11");

  cf2_triangulation* c = cf2_triangulation_clone(t);
  CHECK(cf2_triangulation_equal(c, t));

  cf2_quiver_free(q);
  cf2_triangulation_free(c);
  cf2_triangulation_free(f);
  cf2_triangulation_free(back);
  cf2_triangulation_free(t);
  cf2_triangulation_free(nullptr);

  CHECK(cf2_is_diagonal(5, 0, 2));
  CHECK_FALSE(cf2_is_diagonal(5, 0, 5));
  CHECK(cf2_crosses(0, 2, 3, 1));
}

TEST_CASE("errors leave outputs untouched and set the message") {
  const int crossing[] = {0, 2, 1, 3, 0, 4};
  cf2_triangulation* t = nullptr;
  CHECK(cf2_triangulation_create(5, crossing, 3, &t) == CF2_INVALID_ARGUMENT);
  CHECK(t == nullptr);
  CHECK(std::string(cf2_last_error()).size() > 0);
  CHECK(cf2_triangulation_create(5, nullptr, 3, &t) == CF2_NULL_ARGUMENT);
  CHECK(cf2_triangulation_create(5, crossing, 3, nullptr) == CF2_NULL_ARGUMENT);
  CHECK(cf2_triangulation_from_json("{", &t) == CF2_PARSE);
  CHECK(cf2_enumerate_triangulations(20, nullptr) == CF2_NULL_ARGUMENT);

  cf2_tri_list* list = nullptr;
  CHECK(cf2_enumerate_triangulations(15, &list) == CF2_RESOURCE);
  CHECK(list == nullptr);

  cf2_quiver* q = nullptr;
  CHECK(cf2_quiver_dynkin('Z', 3, &q) == CF2_INVALID_PARAMETER);
  CHECK(cf2_quiver_from_json(R"({"vertices":[{"id":1},{"id":2},{"id":3}],"arrows":[[1,2],[2,3],[3,1]]})", &q) ==
        CF2_OK);
  char* s = nullptr;
  CHECK(cf2_count_recursive(q, &s) == CF2_NOT_ACYCLIC);
  CHECK(s == nullptr);
  cf2_quiver_free(q);

  cf2_point* alt = nullptr;
  const int labels[] = {0, 2, 0, 2};
  REQUIRE(cf2_point_create(3, 2, labels, 4, &alt) == CF2_OK);
  CHECK(cf2_algorithm_a(alt, &t) == CF2_NO_COVER);
  cf2_point_free(alt);

  int valid = 0;
  cf2_point* y = nullptr;
  const int ly[] = {0, 1, 0, 2};
  REQUIRE(cf2_point_create(3, 2, ly, 4, &y) == CF2_OK);
  CHECK(cf2_is_valid_diagonal(y, 0, 3, &valid) == CF2_NOT_A_DIAGONAL);
  cf2_point_free(y);

  // A success clears the message.
  CHECK(cf2_quiver_dynkin('A', 2, &q) == CF2_OK);
  CHECK(std::string(cf2_last_error()).empty());
  cf2_quiver_free(q);
}

TEST_CASE("enumeration lists") {
  cf2_tri_list* list = nullptr;
  REQUIRE(cf2_enumerate_triangulations(5, &list) == CF2_OK);
  CHECK(cf2_tri_list_size(list) == 14);
  CHECK(cf2_tri_list_get(list, 14) == nullptr);
  std::size_t fans = 0;
  std::size_t moves_total = 0;
  for (std::size_t k = 0; k < cf2_tri_list_size(list); ++k) {
    int fan = 0;
    std::size_t moves = 0;
    REQUIRE(cf2_triangulation_is_fan(cf2_tri_list_get(list, k), &fan) == CF2_OK);
    REQUIRE(cf2_hex_move_count(cf2_tri_list_get(list, k), &moves) == CF2_OK);
    fans += fan;
    moves_total += moves;
    CHECK((fan != 0) == (moves == 0));
  }
  CHECK(fans == 6);
  CHECK(moves_total == 8);
  char* s = nullptr;
  REQUIRE(cf2_tri_list_to_json(list, &s) == CF2_OK);
  CHECK(take_json(s)["triangulations"].size() == 14);
  cf2_tri_list_free(list);

  cf2_point_list* pts = nullptr;
  REQUIRE(cf2_enumerate_points(5, 2, 1, &pts) == CF2_OK);
  CHECK(cf2_point_list_size(pts) == 10);
  const cf2_point* p0 = cf2_point_list_get(pts, 0);
  CHECK(cf2_point_m(p0) == 5);
  CHECK(cf2_point_q(p0) == 2);
  CHECK(cf2_point_label(p0, 0) == 0);
  CHECK(cf2_point_label(p0, 5) == 2);
  CHECK(cf2_point_label(p0, 6) == -1);
  cf2_point_list_free(pts);

  REQUIRE(cf2_deep_points(5, 3, 0, &pts) == CF2_OK);
  CHECK(cf2_point_list_size(pts) == 1);
  REQUIRE(cf2_point_list_to_json(pts, &s) == CF2_OK);
  CHECK(take_json(s)["points"][0]["labels"] == json{0, 3, 0, 3, 0, 3});
  cf2_point_list_free(pts);
}

TEST_CASE("coloring and covering through the C API") {
  cf2_point* y = nullptr;
  REQUIRE(cf2_point_from_json(R"({"m":11,"q":3,"labels":[0,1,3,1,2,0,3,2,1,0,2,3]})", &y) == CF2_OK);
  cf2_triangulation* t = nullptr;
  REQUIRE(cf2_algorithm_a(y, &t) == CF2_OK);
  int proper = 0;
  REQUIRE(cf2_is_proper(t, y, &proper) == CF2_OK);
  CHECK(proper == 1);
  cf2_point* z = nullptr;
  cf2_point* c = nullptr;
  REQUIRE(cf2_algorithm_b(y, &z) == CF2_OK);
  REQUIRE(cf2_f2_coloring(t, &c) == CF2_OK);
  char *zs = nullptr, *cs = nullptr;
  REQUIRE(cf2_point_to_json(z, &zs) == CF2_OK);
  REQUIRE(cf2_point_to_json(c, &cs) == CF2_OK);
  CHECK(take(zs) == take(cs));
  char* inv = nullptr;
  REQUIRE(cf2_invalid_diagonals_json(y, &inv) == CF2_OK);
  CHECK(take_json(inv).size() == 12);
  int admits = 0;
  REQUIRE(cf2_admits_some_triangulation(y, &admits) == CF2_OK);
  CHECK(admits == 1);
  cf2_point_free(z);
  cf2_point_free(c);
  cf2_triangulation_free(t);
  cf2_point_free(y);

  cf2_tri_list* cover = nullptr;
  REQUIRE(cf2_upsilon_cover(6, 3, 0, &cover) == CF2_OK);
  CHECK(cf2_tri_list_size(cover) == 21);
  char* s = nullptr;
  REQUIRE(cf2_tri_list_to_json(cover, &s) == CF2_OK);
  const auto text = take(s);
  cf2_tri_list_free(cover);
  REQUIRE(cf2_verify_cover_json(text.c_str(), 0, 3, 0, &s) == CF2_OK);
  const auto report = take_json(s);
  CHECK(report["covering"] == true);
  CHECK(report["minimal"] == true);
  CHECK(cf2_verify_cover_json("[]", 0, 2, 0, &s) == CF2_INVALID_ARGUMENT);
  REQUIRE(cf2_verify_cover_json("[]", 4, 2, 0, &s) == CF2_OK);
  CHECK(take_json(s)["uncovered_count"] == 5);

  REQUIRE(cf2_upsilon_cover_json(5, 2, 0, 0, &s) == CF2_OK);
  CHECK(take_json(s)["ok"] == true);
  REQUIRE(cf2_counterexample_json(3, 0, &s) == CF2_OK);
  CHECK(take_json(s)["ok"] == true);
  CHECK(cf2_counterexample_json(2, 0, &s) == CF2_INVALID_PARAMETER);
}

TEST_CASE("hex moves and theorem through the C API") {
  const int pa[] = {0, 2, 0, 3, 3, 5};
  const int pb[] = {1, 4, 1, 5, 2, 4};
  cf2_triangulation *a = nullptr, *b = nullptr, *u = nullptr;
  REQUIRE(cf2_triangulation_create(5, pa, 3, &a) == CF2_OK);
  REQUIRE(cf2_triangulation_create(5, pb, 3, &b) == CF2_OK);
  long long d = 0;
  REQUIRE(cf2_hex_distance(a, b, 4, &d) == CF2_OK);
  CHECK(d == 1);
  REQUIRE(cf2_apply_hex_move(a, 0, &u) == CF2_OK);
  CHECK(cf2_triangulation_equal(u, b));
  CHECK(cf2_apply_hex_move(a, 1, &u) == CF2_INVALID_MOVE);
  char* s = nullptr;
  REQUIRE(cf2_hex_moves_json(a, &s) == CF2_OK);
  CHECK(take_json(s).size() == 1);
  cf2_triangulation_free(u);
  cf2_triangulation_free(b);
  cf2_triangulation_free(a);

  REQUIRE(cf2_verify_theorem_json(6, 0, &s) == CF2_OK);
  CHECK(take_json(s)["equal"] == true);
  REQUIRE(cf2_hex_classes_json(4, 0, &s) == CF2_OK);
  CHECK(take_json(s).size() == 5);
  CHECK(cf2_hex_classes_json(13, 0, &s) == CF2_RESOURCE);
}

TEST_CASE("counts through the C API") {
  cf2_quiver* q = nullptr;
  REQUIRE(cf2_quiver_from_spec("dynkin:E:8", &q) == CF2_OK);
  int acyclic = 0;
  REQUIRE(cf2_quiver_is_acyclic(q, &acyclic) == CF2_OK);
  CHECK(acyclic == 1);
  char* s = nullptr;
  REQUIRE(cf2_count_recursive(q, &s) == CF2_OK);
  CHECK(take(s) == "381");
  REQUIRE(cf2_count_recursive_random(q, 42, &s) == CF2_OK);
  CHECK(take(s) == "381");
  std::uint64_t n = 0;
  REQUIRE(cf2_count_bruteforce(q, 0, &n) == CF2_OK);
  CHECK(n == 381);
  REQUIRE(cf2_quiver_to_json(q, &s) == CF2_OK);
  CHECK(take_json(s)["vertices"].size() == 8);
  cf2_quiver_free(q);

  REQUIRE(cf2_closed_form('D', 4, &s) == CF2_OK);
  CHECK(take(s) == "29");
  REQUIRE(cf2_seed_count('A', 3, &s) == CF2_OK);
  CHECK(take(s) == "14");
  REQUIRE(cf2_seed_count('E', 8, &s) == CF2_OK);
  CHECK(take(s) == "25080");
  CHECK(cf2_closed_form('E', 6, &s) == CF2_INVALID_PARAMETER);
}

TEST_CASE("thread count does not change results") {
  char* s = nullptr;
  cf2_set_threads(1);
  REQUIRE(cf2_upsilon_cover_json(7, 3, 1, 0, &s) == CF2_OK);
  const auto one = take(s);
  cf2_set_threads(4);
  REQUIRE(cf2_upsilon_cover_json(7, 3, 1, 0, &s) == CF2_OK);
  CHECK(take(s) == one);
  cf2_set_threads(0);
}
