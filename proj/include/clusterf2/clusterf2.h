#ifndef CLUSTERF2_H
#define CLUSTERF2_H

/* C interface to libclusterf2.
 *
 * Every fallible call returns a cf2_status and writes its result through an
 * out pointer. On failure the out pointer is left untouched and
 * cf2_last_error() describes the problem (per thread).
 *
 * Strings handed out through char** are owned by the caller and released
 * with cf2_string_free. Handles are released with their *_free function;
 * passing NULL to any *_free is a no-op.
 *
 * Colors: 0 is zero, q is infinity, 1..q-1 the other points of P^1(F_q).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CF2_BUILDING_LIBRARY)
#    define CF2_API __declspec(dllexport)
#  else
#    define CF2_API __declspec(dllimport)
#  endif
#else
#  define CF2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf2_status {
  CF2_OK = 0,
  CF2_INVALID_PARAMETER = 1,
  CF2_INVALID_ARGUMENT = 2,
  CF2_NOT_A_DIAGONAL = 3,
  CF2_INVALID_MOVE = 4,
  CF2_NOT_ACYCLIC = 5,
  CF2_RESOURCE = 6,
  CF2_NO_COVER = 7,
  CF2_PARSE = 8,
  CF2_INTERNAL = 9,
  CF2_NULL_ARGUMENT = 10
} cf2_status;

typedef struct cf2_triangulation cf2_triangulation;
typedef struct cf2_tri_list cf2_tri_list;
typedef struct cf2_point cf2_point;
typedef struct cf2_point_list cf2_point_list;
typedef struct cf2_quiver cf2_quiver;

CF2_API const char* cf2_version(void);
CF2_API const char* cf2_status_name(cf2_status status);
CF2_API const char* cf2_last_error(void);
CF2_API void cf2_string_free(char* s);

/* 0 = one worker per logical core. */
CF2_API void cf2_set_threads(unsigned n);

/* ---- polygon ---------------------------------------------------------- */

/* pairs holds count (i, j) pairs, flattened. */
CF2_API cf2_status cf2_triangulation_create(int m, const int* pairs, size_t count,
                                            cf2_triangulation** out);
CF2_API cf2_status cf2_triangulation_from_json(const char* json, cf2_triangulation** out);
CF2_API cf2_status cf2_triangulation_to_json(const cf2_triangulation* t, char** out);
CF2_API cf2_triangulation* cf2_triangulation_clone(const cf2_triangulation* t);
CF2_API void cf2_triangulation_free(cf2_triangulation* t);

CF2_API int cf2_triangulation_m(const cf2_triangulation* t);
CF2_API size_t cf2_triangulation_diagonal_count(const cf2_triangulation* t);
CF2_API cf2_status cf2_triangulation_diagonal(const cf2_triangulation* t, size_t k, int* i,
                                              int* j);
CF2_API int cf2_triangulation_equal(const cf2_triangulation* a, const cf2_triangulation* b);
CF2_API cf2_status cf2_triangulation_is_fan(const cf2_triangulation* t, int* out);
CF2_API cf2_status cf2_triangulation_flip(const cf2_triangulation* t, int i, int j,
                                          cf2_triangulation** out);
CF2_API cf2_status cf2_triangulation_quiver(const cf2_triangulation* t, cf2_quiver** out);

CF2_API int cf2_is_diagonal(int m, int i, int j);
CF2_API int cf2_crosses(int i1, int j1, int i2, int j2);

/* Lexicographic order. */
CF2_API cf2_status cf2_enumerate_triangulations(int m, cf2_tri_list** out);
CF2_API size_t cf2_tri_list_size(const cf2_tri_list* list);
/* Borrowed; valid until the list is freed. */
CF2_API const cf2_triangulation* cf2_tri_list_get(const cf2_tri_list* list, size_t k);
/* {"triangulations": [...]} */
CF2_API cf2_status cf2_tri_list_to_json(const cf2_tri_list* list, char** out);
CF2_API void cf2_tri_list_free(cf2_tri_list* list);

/* ---- coloring --------------------------------------------------------- */

CF2_API cf2_status cf2_point_create(int m, int q, const int* labels, size_t count,
                                    cf2_point** out);
CF2_API cf2_status cf2_point_from_json(const char* json, cf2_point** out);
CF2_API cf2_status cf2_point_to_json(const cf2_point* p, char** out);
CF2_API void cf2_point_free(cf2_point* p);
CF2_API int cf2_point_m(const cf2_point* p);
CF2_API int cf2_point_q(const cf2_point* p);
/* -1 when k is out of range. */
CF2_API int cf2_point_label(const cf2_point* p, size_t k);

/* nondeep != 0 drops the alternating point. */
CF2_API cf2_status cf2_enumerate_points(int m, int q, int nondeep, cf2_point_list** out);
CF2_API cf2_status cf2_deep_points(int m, int q, int force, cf2_point_list** out);
CF2_API size_t cf2_point_list_size(const cf2_point_list* list);
CF2_API const cf2_point* cf2_point_list_get(const cf2_point_list* list, size_t k);
/* {"points": [...]} */
CF2_API cf2_status cf2_point_list_to_json(const cf2_point_list* list, char** out);
CF2_API void cf2_point_list_free(cf2_point_list* list);

CF2_API cf2_status cf2_is_proper(const cf2_triangulation* t, const cf2_point* y, int* out);
CF2_API cf2_status cf2_f2_coloring(const cf2_triangulation* t, cf2_point** out);
/* [[i,j], ...] */
CF2_API cf2_status cf2_invalid_diagonals_json(const cf2_point* y, char** out);
CF2_API cf2_status cf2_is_valid_diagonal(const cf2_point* y, int i, int j, int* out);
CF2_API cf2_status cf2_admits_some_triangulation(const cf2_point* y, int* out);

/* ---- hexagonal moves -------------------------------------------------- */

CF2_API cf2_status cf2_hex_move_count(const cf2_triangulation* t, size_t* out);
/* [{"hexagon":[..6], "kind":..., "axis":a, "remove":[..], "add":[..]}, ...] */
CF2_API cf2_status cf2_hex_moves_json(const cf2_triangulation* t, char** out);
/* Applies the k-th move listed by cf2_hex_moves_json. */
CF2_API cf2_status cf2_apply_hex_move(const cf2_triangulation* t, size_t k,
                                      cf2_triangulation** out);
CF2_API cf2_status cf2_hex_classes_json(int m, int force, char** out);
CF2_API cf2_status cf2_verify_theorem_json(int m, int force, char** out);
/* *out = -1 when no path of at most max_steps moves exists. */
CF2_API cf2_status cf2_hex_distance(const cf2_triangulation* from, const cf2_triangulation* to,
                                    size_t max_steps, long long* out);

/* ---- quivers ---------------------------------------------------------- */

CF2_API cf2_status cf2_quiver_from_json(const char* json, cf2_quiver** out);
/* "dynkin:D:5" */
CF2_API cf2_status cf2_quiver_from_spec(const char* spec, cf2_quiver** out);
CF2_API cf2_status cf2_quiver_dynkin(char type, int rank, cf2_quiver** out);
CF2_API cf2_status cf2_quiver_to_json(const cf2_quiver* q, char** out);
CF2_API void cf2_quiver_free(cf2_quiver* q);
CF2_API size_t cf2_quiver_mutable_count(const cf2_quiver* q);
CF2_API size_t cf2_quiver_frozen_count(const cf2_quiver* q);
CF2_API cf2_status cf2_quiver_is_acyclic(const cf2_quiver* q, int* out);

/* Counts are decimal strings (they can exceed 64 bits). */
CF2_API cf2_status cf2_count_recursive(const cf2_quiver* q, char** out);
CF2_API cf2_status cf2_count_recursive_random(const cf2_quiver* q, uint64_t seed, char** out);
CF2_API cf2_status cf2_count_bruteforce(const cf2_quiver* q, int force, uint64_t* out);
CF2_API cf2_status cf2_closed_form(char type, int rank, char** out);
CF2_API cf2_status cf2_seed_count(char type, int rank, char** out);

/* ---- covering --------------------------------------------------------- */

CF2_API cf2_status cf2_algorithm_a(const cf2_point* y, cf2_triangulation** out);
CF2_API cf2_status cf2_algorithm_b(const cf2_point* y, cf2_point** out);
CF2_API cf2_status cf2_upsilon_cover(int m, int q, int force, cf2_tri_list** out);
CF2_API cf2_status cf2_upsilon_cover_json(int m, int q, int verbose, int force, char** out);
/* list_json as accepted by the CLI's verify-cover; m <= 0 takes m from the
 * first member. */
CF2_API cf2_status cf2_verify_cover_json(const char* list_json, int m, int q, int verbose,
                                         char** out);
CF2_API cf2_status cf2_counterexample_json(int q, int verbose, char** out);

#ifdef __cplusplus
}
#endif

#endif
