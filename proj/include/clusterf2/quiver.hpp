#pragma once

// Ice quivers and F_2 point counts of acyclic cluster varieties.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterf2 {

using Count = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(Count value);

struct QuiverVertex {
  int id = 0;
  bool frozen = false;

  friend bool operator==(const QuiverVertex&, const QuiverVertex&) = default;
};

// Loop-free multidigraph with a mutable/frozen vertex partition. Repeated
// arrows encode multiplicity.
class IceQuiver {
 public:
  IceQuiver() = default;

  // Validates: unique ids, arrows between known vertices, no loops, no
  // directed 2-cycles, no frozen-frozen arrows, no isolated mutable vertex.
  IceQuiver(std::vector<QuiverVertex> vertices,
            std::vector<std::pair<int, int>> arrows);

  const std::vector<QuiverVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<int, int>>& arrows() const noexcept { return arrows_; }

  std::size_t mutable_count() const noexcept;
  std::size_t frozen_count() const noexcept;

  // True iff the mutable part has no directed cycle.
  bool is_acyclic() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  std::vector<QuiverVertex> vertices_;
  std::vector<std::pair<int, int>> arrows_;
};

enum class CountMethod { Recursion, BruteForce, ClosedForm };

const char* count_method_name(CountMethod method) noexcept;

struct CountResult {
  Count count = 0;
  CountMethod method = CountMethod::Recursion;
};

// #V_{F_2} by sink/source elimination:
//   #V(Q) = #V(Q - i) + 2 #V(Q - N(i)).
// Frozen vertices are dropped first; the memo is keyed on the surviving
// vertex subset. Throws NotAcyclic.
CountResult f2_count_recursive(const IceQuiver& q);

// Same recursion, but the eliminated sink/source is drawn uniformly from
// all admissible vertices at every step. No memoization.
CountResult f2_count_recursive(const IceQuiver& q, std::mt19937_64& rng);

inline constexpr std::size_t kBruteForceMaxMutable = 14;
inline constexpr std::size_t kBruteForceForcedMaxMutable = 18;

// Exhausts all 2^(2n) assignments of (x_k, x'_k) with frozens set to 1 and
// counts those satisfying every exchange relation over F_2.
CountResult f2_count_bruteforce(const IceQuiver& q, bool force = false);

enum class DynkinType { A, D, E };

std::optional<DynkinType> parse_dynkin_type(char c) noexcept;
char dynkin_letter(DynkinType t) noexcept;

// A_n: 1->2->...->n (A_1 gets a frozen sink). D_n: path 1->...->n-2 plus
// n-1->n-2 and n->n-2. E_n: path 1->...->n-1 plus n->3.
IceQuiver dynkin_quiver(DynkinType type, int rank);

// Every edge orientation of the Dynkin diagram (all acyclic: it is a tree).
std::vector<IceQuiver> dynkin_orientations(DynkinType type, int rank);

// Point-count column: (2^{n+2}+(-1)^{n+1})/3, (5*2^n+7(-1)^n)/3, 381.
BigInt closed_form(DynkinType type, int rank);

// Seed column: C(2n+3,n+1)/(2n+3), (3n-2)/n * C(2n-2,n-1), 25080.
BigInt seed_count(DynkinType type, int rank);

// "dynkin:D:5" builder spec.
IceQuiver quiver_from_spec(const std::string& spec);

}  // namespace clusterf2
