#include "clusterf2/clusterf2.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>

#include "clusterf2/error.hpp"
#include "clusterf2/json_io.hpp"
#include "clusterf2/parallel.hpp"

using namespace clusterf2;

struct cf2_triangulation {
  Triangulation value;
};
struct cf2_tri_list {
  std::vector<cf2_triangulation> items;
};
struct cf2_point {
  PointX value;
};
struct cf2_point_list {
  std::vector<cf2_point> items;
};
struct cf2_quiver {
  IceQuiver value;
};

namespace {

thread_local std::string g_last_error;

cf2_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return CF2_INVALID_PARAMETER;
    case ErrorCode::InvalidArgument: return CF2_INVALID_ARGUMENT;
    case ErrorCode::NotADiagonal: return CF2_NOT_A_DIAGONAL;
    case ErrorCode::InvalidMove: return CF2_INVALID_MOVE;
    case ErrorCode::NotAcyclic: return CF2_NOT_ACYCLIC;
    case ErrorCode::Resource: return CF2_RESOURCE;
    case ErrorCode::NoCover: return CF2_NO_COVER;
    case ErrorCode::Parse: return CF2_PARSE;
    case ErrorCode::Internal: return CF2_INTERNAL;
  }
  return CF2_INTERNAL;
}

template <typename F>
cf2_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return CF2_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CF2_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CF2_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return CF2_INTERNAL;
  }
}

cf2_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return CF2_NULL_ARGUMENT;
}

#define CF2_REQUIRE(p) \
  do {                 \
    if (!(p)) return null_argument(#p); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

DynkinType dynkin_type(char c) {
  const auto t = parse_dynkin_type(c);
  if (!t) fail(ErrorCode::InvalidParameter, std::string("unknown Dynkin type '") + c + "'");
  return *t;
}

cf2_tri_list* wrap(std::vector<Triangulation> ts) {
  auto* list = new cf2_tri_list;
  list->items.reserve(ts.size());
  for (auto& t : ts) list->items.push_back({std::move(t)});
  return list;
}

cf2_point_list* wrap(std::vector<PointX> ps) {
  auto* list = new cf2_point_list;
  list->items.reserve(ps.size());
  for (auto& p : ps) list->items.push_back({std::move(p)});
  return list;
}

}  // namespace

extern "C" {

const char* cf2_version(void) { return "1.0.0"; }

const char* cf2_status_name(cf2_status status) {
  switch (status) {
    case CF2_OK: return "ok";
    case CF2_INVALID_PARAMETER: return "invalid-parameter";
    case CF2_INVALID_ARGUMENT: return "invalid-argument";
    case CF2_NOT_A_DIAGONAL: return "not-a-diagonal";
    case CF2_INVALID_MOVE: return "invalid-move";
    case CF2_NOT_ACYCLIC: return "not-acyclic";
    case CF2_RESOURCE: return "resource";
    case CF2_NO_COVER: return "no-cover";
    case CF2_PARSE: return "parse";
    case CF2_INTERNAL: return "internal";
    case CF2_NULL_ARGUMENT: return "null-argument";
  }
  return "unknown";
}

const char* cf2_last_error(void) { return g_last_error.c_str(); }

void cf2_string_free(char* s) { std::free(s); }

void cf2_set_threads(unsigned n) { set_thread_count(n); }

/* polygon */

cf2_status cf2_triangulation_create(int m, const int* pairs, size_t count,
                                    cf2_triangulation** out) {
  CF2_REQUIRE(out);
  if (count) CF2_REQUIRE(pairs);
  return guarded([&] {
    std::vector<Diagonal> ds;
    for (size_t k = 0; k < count; ++k) {
      int a = pairs[2 * k];
      int b = pairs[2 * k + 1];
      if (a > b) std::swap(a, b);
      ds.push_back({a, b});
    }
    *out = new cf2_triangulation{Triangulation(m, std::move(ds))};
  });
}

cf2_status cf2_triangulation_from_json(const char* json, cf2_triangulation** out) {
  CF2_REQUIRE(json);
  CF2_REQUIRE(out);
  return guarded([&] {
    *out = new cf2_triangulation{triangulation_from_json(parse_json_text(json))};
  });
}

cf2_status cf2_triangulation_to_json(const cf2_triangulation* t, char** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(t->value).dump()); });
}

cf2_triangulation* cf2_triangulation_clone(const cf2_triangulation* t) {
  if (!t) return nullptr;
  return new (std::nothrow) cf2_triangulation{t->value};
}

void cf2_triangulation_free(cf2_triangulation* t) { delete t; }

int cf2_triangulation_m(const cf2_triangulation* t) { return t ? t->value.m() : -1; }

size_t cf2_triangulation_diagonal_count(const cf2_triangulation* t) {
  return t ? t->value.diagonals().size() : 0;
}

cf2_status cf2_triangulation_diagonal(const cf2_triangulation* t, size_t k, int* i, int* j) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(i);
  CF2_REQUIRE(j);
  return guarded([&] {
    const auto ds = t->value.diagonals();
    if (k >= ds.size()) fail(ErrorCode::InvalidArgument, "diagonal index out of range");
    *i = ds[k].i;
    *j = ds[k].j;
  });
}

int cf2_triangulation_equal(const cf2_triangulation* a, const cf2_triangulation* b) {
  return a && b && a->value == b->value;
}

cf2_status cf2_triangulation_is_fan(const cf2_triangulation* t, int* out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] { *out = is_fan(t->value); });
}

cf2_status cf2_triangulation_flip(const cf2_triangulation* t, int i, int j,
                                  cf2_triangulation** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] {
    if (i > j) std::swap(i, j);
    *out = new cf2_triangulation{flip(t->value, Diagonal{i, j})};
  });
}

cf2_status cf2_triangulation_quiver(const cf2_triangulation* t, cf2_quiver** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_quiver{quiver_of(t->value)}; });
}

int cf2_is_diagonal(int m, int i, int j) { return is_diagonal(m, i, j); }

int cf2_crosses(int i1, int j1, int i2, int j2) {
  if (i1 > j1) std::swap(i1, j1);
  if (i2 > j2) std::swap(i2, j2);
  return crosses({i1, j1}, {i2, j2});
}

cf2_status cf2_enumerate_triangulations(int m, cf2_tri_list** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = wrap(enumerate_triangulations(m)); });
}

size_t cf2_tri_list_size(const cf2_tri_list* list) { return list ? list->items.size() : 0; }

const cf2_triangulation* cf2_tri_list_get(const cf2_tri_list* list, size_t k) {
  if (!list || k >= list->items.size()) return nullptr;
  return &list->items[k];
}

cf2_status cf2_tri_list_to_json(const cf2_tri_list* list, char** out) {
  CF2_REQUIRE(list);
  CF2_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : list->items) arr.push_back(to_json(t.value));
    *out = dup_string(nlohmann::json{{"triangulations", std::move(arr)}}.dump());
  });
}

void cf2_tri_list_free(cf2_tri_list* list) { delete list; }

/* coloring */

cf2_status cf2_point_create(int m, int q, const int* labels, size_t count, cf2_point** out) {
  CF2_REQUIRE(out);
  if (count) CF2_REQUIRE(labels);
  return guarded([&] {
    *out = new cf2_point{PointX(m, q, std::vector<int>(labels, labels + count))};
  });
}

cf2_status cf2_point_from_json(const char* json, cf2_point** out) {
  CF2_REQUIRE(json);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_point{point_from_json(parse_json_text(json))}; });
}

cf2_status cf2_point_to_json(const cf2_point* p, char** out) {
  CF2_REQUIRE(p);
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(p->value).dump()); });
}

void cf2_point_free(cf2_point* p) { delete p; }

int cf2_point_m(const cf2_point* p) { return p ? p->value.m() : -1; }

int cf2_point_q(const cf2_point* p) { return p ? p->value.q() : -1; }

int cf2_point_label(const cf2_point* p, size_t k) {
  if (!p || k >= p->value.labels().size()) return -1;
  return p->value[k];
}

cf2_status cf2_enumerate_points(int m, int q, int nondeep, cf2_point_list** out) {
  CF2_REQUIRE(out);
  return guarded([&] {
    *out = wrap(nondeep ? enumerate_nondeep_points(m, q) : enumerate_points(m, q));
  });
}

cf2_status cf2_deep_points(int m, int q, int force, cf2_point_list** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = wrap(deep_points(m, q, force != 0)); });
}

size_t cf2_point_list_size(const cf2_point_list* list) { return list ? list->items.size() : 0; }

const cf2_point* cf2_point_list_get(const cf2_point_list* list, size_t k) {
  if (!list || k >= list->items.size()) return nullptr;
  return &list->items[k];
}

cf2_status cf2_point_list_to_json(const cf2_point_list* list, char** out) {
  CF2_REQUIRE(list);
  CF2_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : list->items) arr.push_back(to_json(p.value));
    *out = dup_string(nlohmann::json{{"points", std::move(arr)}}.dump());
  });
}

void cf2_point_list_free(cf2_point_list* list) { delete list; }

cf2_status cf2_is_proper(const cf2_triangulation* t, const cf2_point* y, int* out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] { *out = is_proper(t->value, y->value); });
}

cf2_status cf2_f2_coloring(const cf2_triangulation* t, cf2_point** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_point{f2_coloring(t->value)}; });
}

cf2_status cf2_invalid_diagonals_json(const cf2_point* y, char** out) {
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : invalid_diagonals(y->value)) arr.push_back(to_json(d));
    *out = dup_string(arr.dump());
  });
}

cf2_status cf2_is_valid_diagonal(const cf2_point* y, int i, int j, int* out) {
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] { *out = is_valid_diagonal(y->value, Diagonal{i, j}); });
}

cf2_status cf2_admits_some_triangulation(const cf2_point* y, int* out) {
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] { *out = admits_some_triangulation(y->value); });
}

/* hexagonal moves */

cf2_status cf2_hex_move_count(const cf2_triangulation* t, size_t* out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] { *out = find_hex_moves(t->value).size(); });
}

cf2_status cf2_hex_moves_json(const cf2_triangulation* t, char** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& mv : find_hex_moves(t->value)) arr.push_back(to_json(mv));
    *out = dup_string(arr.dump());
  });
}

cf2_status cf2_apply_hex_move(const cf2_triangulation* t, size_t k, cf2_triangulation** out) {
  CF2_REQUIRE(t);
  CF2_REQUIRE(out);
  return guarded([&] {
    const auto moves = find_hex_moves(t->value);
    if (k >= moves.size()) fail(ErrorCode::InvalidMove, "move index out of range");
    *out = new cf2_triangulation{apply_hex_move(t->value, moves[k])};
  });
}

cf2_status cf2_hex_classes_json(int m, int force, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(classes_to_json(hex_classes(m, force != 0)).dump()); });
}

cf2_status cf2_verify_theorem_json(int m, int force, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(verify_theorem_main(m, force != 0)).dump()); });
}

cf2_status cf2_hex_distance(const cf2_triangulation* from, const cf2_triangulation* to,
                            size_t max_steps, long long* out) {
  CF2_REQUIRE(from);
  CF2_REQUIRE(to);
  CF2_REQUIRE(out);
  return guarded([&] {
    const auto d = hex_distance(from->value, to->value, max_steps);
    *out = d ? static_cast<long long>(*d) : -1;
  });
}

/* quivers */

cf2_status cf2_quiver_from_json(const char* json, cf2_quiver** out) {
  CF2_REQUIRE(json);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_quiver{quiver_from_json(parse_json_text(json))}; });
}

cf2_status cf2_quiver_from_spec(const char* spec, cf2_quiver** out) {
  CF2_REQUIRE(spec);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_quiver{quiver_from_spec(spec)}; });
}

cf2_status cf2_quiver_dynkin(char type, int rank, cf2_quiver** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_quiver{dynkin_quiver(dynkin_type(type), rank)}; });
}

cf2_status cf2_quiver_to_json(const cf2_quiver* q, char** out) {
  CF2_REQUIRE(q);
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(q->value).dump()); });
}

void cf2_quiver_free(cf2_quiver* q) { delete q; }

size_t cf2_quiver_mutable_count(const cf2_quiver* q) { return q ? q->value.mutable_count() : 0; }

size_t cf2_quiver_frozen_count(const cf2_quiver* q) { return q ? q->value.frozen_count() : 0; }

cf2_status cf2_quiver_is_acyclic(const cf2_quiver* q, int* out) {
  CF2_REQUIRE(q);
  CF2_REQUIRE(out);
  return guarded([&] { *out = q->value.is_acyclic(); });
}

cf2_status cf2_count_recursive(const cf2_quiver* q, char** out) {
  CF2_REQUIRE(q);
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_string(f2_count_recursive(q->value).count)); });
}

cf2_status cf2_count_recursive_random(const cf2_quiver* q, uint64_t seed, char** out) {
  CF2_REQUIRE(q);
  CF2_REQUIRE(out);
  return guarded([&] {
    std::mt19937_64 rng(seed);
    *out = dup_string(to_string(f2_count_recursive(q->value, rng).count));
  });
}

cf2_status cf2_count_bruteforce(const cf2_quiver* q, int force, uint64_t* out) {
  CF2_REQUIRE(q);
  CF2_REQUIRE(out);
  return guarded([&] {
    *out = static_cast<uint64_t>(f2_count_bruteforce(q->value, force != 0).count);
  });
}

cf2_status cf2_closed_form(char type, int rank, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(closed_form(dynkin_type(type), rank).str()); });
}

cf2_status cf2_seed_count(char type, int rank, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(seed_count(dynkin_type(type), rank).str()); });
}

/* covering */

cf2_status cf2_algorithm_a(const cf2_point* y, cf2_triangulation** out) {
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_triangulation{algorithm_a(y->value)}; });
}

cf2_status cf2_algorithm_b(const cf2_point* y, cf2_point** out) {
  CF2_REQUIRE(y);
  CF2_REQUIRE(out);
  return guarded([&] { *out = new cf2_point{algorithm_b(y->value)}; });
}

cf2_status cf2_upsilon_cover(int m, int q, int force, cf2_tri_list** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = wrap(upsilon_cover(m, q, false, force != 0).report.cover); });
}

cf2_status cf2_upsilon_cover_json(int m, int q, int verbose, int force, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(to_json(upsilon_cover(m, q, verbose != 0, force != 0), verbose != 0).dump());
  });
}

cf2_status cf2_verify_cover_json(const char* list_json, int m, int q, int verbose, char** out) {
  CF2_REQUIRE(list_json);
  CF2_REQUIRE(out);
  return guarded([&] {
    auto cover = triangulation_list_from_json(parse_json_text(list_json));
    if (m <= 0) {
      if (cover.empty()) fail(ErrorCode::InvalidArgument, "empty cover: m must be given");
      m = cover.front().m();
    }
    *out = dup_string(to_json(verify_covering(std::move(cover), m, q, verbose != 0), verbose != 0).dump());
  });
}

cf2_status cf2_counterexample_json(int q, int verbose, char** out) {
  CF2_REQUIRE(out);
  return guarded([&] { *out = dup_string(to_json(counterexample_cover(q), verbose != 0).dump()); });
}

}  // extern "C"
