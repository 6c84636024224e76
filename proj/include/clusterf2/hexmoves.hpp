#pragma once

// Hexagonal moves: zig-zag and inscribed-triangle rewrites on a sub-hexagon
// that is a union of four triangles of the host triangulation.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "clusterf2/coloring.hpp"
#include "clusterf2/polygon.hpp"

namespace clusterf2 {

// Positions p0..p5 below are the hexagon's vertices in increasing polygon
// order. For axis a in {0,1,2} (antipodal pair p_a, p_{a+3}):
//   zig-zag A: p_a - p_{a+2} - p_{a+5} - p_{a+3}
//   zig-zag B: p_a - p_{a+4} - p_{a+1} - p_{a+3}
// Inscribed triangles: odd {p1,p3,p5}, even {p0,p2,p4}.
enum class HexMoveKind {
  ZigzagAToB,
  ZigzagBToA,
  TriangleOddToEven,
  TriangleEvenToOdd,
};

const char* hex_move_kind_name(HexMoveKind kind) noexcept;

struct HexMove {
  std::array<int, 6> hexagon{};
  HexMoveKind kind = HexMoveKind::ZigzagAToB;
  int axis = 0;  // zig-zag moves only

  std::array<Diagonal, 3> source() const;
  std::array<Diagonal, 3> target() const;
  HexMove inverse() const;

  friend bool operator==(const HexMove&, const HexMove&) = default;
};

std::vector<HexMove> find_hex_moves(const Triangulation& t);

// Throws InvalidMove unless mv is applicable to t.
Triangulation apply_hex_move(const Triangulation& t, const HexMove& mv);

inline constexpr int kHexClassesMaxM = 12;
inline constexpr int kTheoremMaxM = 11;

// Connected components of the move graph. Members of each class are sorted,
// classes are ordered by their least member.
std::vector<std::vector<Triangulation>> hex_classes(int m, bool force = false);

// Fibers of c, ordered like hex_classes.
std::vector<std::vector<Triangulation>> coloring_fibers(int m);

struct TheoremReport {
  int m = 0;
  std::size_t triangulations = 0;
  std::size_t classes = 0;
  std::size_t fibers = 0;
  bool equal = false;
  std::map<std::size_t, std::size_t> class_histogram;  // size -> count
  std::map<std::size_t, std::size_t> fiber_histogram;
};

// Compares the move-class partition with the c-fiber partition.
TheoremReport verify_theorem_main(int m, bool force = false);

// Length of a shortest hexagonal-move path, if one exists within max_steps.
std::optional<std::size_t> hex_distance(const Triangulation& from,
                                        const Triangulation& to,
                                        std::size_t max_steps);

}  // namespace clusterf2
