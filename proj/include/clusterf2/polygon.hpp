#pragma once

// Triangulations of the convex polygon P_{m+1}.
//
// Vertices are 0..m in clockwise order. The side (m,0) is the distinguished
// side carrying the frozen vertex; it is never a diagonal.

#include <array>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "clusterf2/quiver.hpp"

namespace clusterf2 {

// Largest polygon parameter the bitmask-based routines accept
// (17 vertices, 119 diagonals).
inline constexpr int kMaxPolygonM = 16;

using DiagonalMask = std::bitset<128>;

struct Diagonal {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

bool is_diagonal(int m, int a, int b) noexcept;

// Normalizes (a,b) to i<j; throws NotADiagonal for sides and the
// distinguished side.
Diagonal make_diagonal(int m, int a, int b);

// True iff the open chords intersect.
bool crosses(Diagonal d1, Diagonal d2) noexcept;

int diagonal_count(int m) noexcept;

// Position of d in the lexicographic list of all diagonals of P_{m+1}.
int diagonal_index(int m, Diagonal d) noexcept;

std::vector<Diagonal> all_diagonals(int m);

class Triangulation {
 public:
  // Validates: normalized diagonals, pairwise non-crossing, exactly m-2.
  Triangulation(int m, std::vector<Diagonal> diagonals);

  int m() const noexcept { return m_; }
  std::span<const Diagonal> diagonals() const noexcept { return diagonals_; }
  bool contains(Diagonal d) const noexcept;

  // Bit diagonal_index(m, d) is set for each d in the triangulation.
  DiagonalMask mask() const;

  // Adjacency over diagonals plus all polygon sides (including (m,0)).
  std::vector<std::uint64_t> adjacency() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.diagonals_ <=> b.diagonals_;
  }

 private:
  struct Unchecked {};
  Triangulation(Unchecked, int m, std::vector<Diagonal> diagonals)
      : m_(m), diagonals_(std::move(diagonals)) {}

  friend Triangulation make_unchecked(int, std::vector<Diagonal>);

  int m_;
  std::vector<Diagonal> diagonals_;  // sorted
};

struct TriangulationHash {
  std::size_t operator()(const Triangulation& t) const noexcept;
};

// Sorts the diagonals but skips the crossing check. For internal producers
// whose output is valid by construction.
Triangulation make_unchecked(int m, std::vector<Diagonal> diagonals);

// All triangulations of P_{m+1} in lexicographic order of their sorted
// diagonal lists. Requires 2 <= m <= kMaxPolygonM.
std::vector<Triangulation> enumerate_triangulations(int m);

// Replaces d by the other diagonal of the quadrilateral formed by its two
// adjacent triangles.
Triangulation flip(const Triangulation& t, Diagonal d);

// The faces of the triangulation as sorted vertex triples, ascending.
std::vector<std::array<int, 3>> triangles(const Triangulation& t);

Triangulation fan_triangulation(int m, int apex);

bool is_fan(const Triangulation& t);

// Mutable vertex k+1 for the k-th diagonal, frozen vertex m-1 on the side
// (m,0); arrows form a counterclockwise 3-cycle in every triangle.
IceQuiver quiver_of(const Triangulation& t);

}  // namespace clusterf2
