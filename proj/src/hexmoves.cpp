#include "clusterf2/hexmoves.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "clusterf2/error.hpp"
#include "clusterf2/parallel.hpp"

namespace clusterf2 {
namespace {

using Chords = std::array<std::pair<int, int>, 3>;  // positions in the hexagon

Chords zigzag_a(int a) {
  const auto p = [a](int k) { return (a + k) % 6; };
  return {{{p(0), p(2)}, {p(2), p(5)}, {p(5), p(3)}}};
}

Chords zigzag_b(int a) {
  const auto p = [a](int k) { return (a + k) % 6; };
  return {{{p(0), p(4)}, {p(4), p(1)}, {p(1), p(3)}}};
}

constexpr Chords kOddTriangle{{{1, 3}, {3, 5}, {1, 5}}};
constexpr Chords kEvenTriangle{{{0, 2}, {2, 4}, {0, 4}}};

std::array<Diagonal, 3> realize(const std::array<int, 6>& hex, const Chords& chords) {
  std::array<Diagonal, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    int a = hex[chords[k].first];
    int b = hex[chords[k].second];
    if (a > b) std::swap(a, b);
    out[k] = {a, b};
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chords source_chords(const HexMove& mv) {
  switch (mv.kind) {
    case HexMoveKind::ZigzagAToB: return zigzag_a(mv.axis);
    case HexMoveKind::ZigzagBToA: return zigzag_b(mv.axis);
    case HexMoveKind::TriangleOddToEven: return kOddTriangle;
    case HexMoveKind::TriangleEvenToOdd: return kEvenTriangle;
  }
  return kOddTriangle;
}

Chords target_chords(const HexMove& mv) {
  switch (mv.kind) {
    case HexMoveKind::ZigzagAToB: return zigzag_b(mv.axis);
    case HexMoveKind::ZigzagBToA: return zigzag_a(mv.axis);
    case HexMoveKind::TriangleOddToEven: return kEvenTriangle;
    case HexMoveKind::TriangleEvenToOdd: return kOddTriangle;
  }
  return kEvenTriangle;
}

bool boundary_present(const std::vector<std::uint64_t>& adj, const std::array<int, 6>& hex) {
  for (int k = 0; k < 6; ++k) {
    const int a = hex[k];
    const int b = hex[(k + 1) % 6];
    if (!(adj[a] >> b & 1)) return false;
  }
  return true;
}

void collect_hexagons(const std::vector<std::uint64_t>& adj, std::array<int, 6>& hex, int depth,
                      std::vector<std::array<int, 6>>& out) {
  if (depth == 6) {
    if (adj[hex[5]] >> hex[0] & 1) out.push_back(hex);
    return;
  }
  const int last = hex[depth - 1];
  std::uint64_t next = adj[last] & ~((std::uint64_t{2} << last) - 1);
  while (next) {
    const int v = std::countr_zero(next);
    next &= next - 1;
    hex[depth] = v;
    collect_hexagons(adj, hex, depth + 1, out);
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Groups indices by label, classes in order of their least index.
std::vector<std::vector<Triangulation>> group_by(const std::vector<Triangulation>& all,
                                                 const std::vector<std::size_t>& label) {
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<Triangulation>> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    auto [it, fresh] = slot.emplace(label[k], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(all[k]);
  }
  return out;
}

std::vector<std::size_t> class_labels(const std::vector<Triangulation>& all) {
  std::unordered_map<DiagonalMask, std::size_t> index;
  index.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k].mask(), k);

  std::vector<std::vector<std::size_t>> neighbours(all.size());
  parallel_chunks(all.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      for (const auto& mv : find_hex_moves(all[k])) {
        const auto it = index.find(apply_hex_move(all[k], mv).mask());
        if (it == index.end()) fail(ErrorCode::Internal, "move left the enumeration");
        neighbours[k].push_back(it->second);
      }
  });

  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t n : neighbours[k]) {
      const auto a = find_root(parent, k);
      const auto b = find_root(parent, n);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::size_t> label(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) label[k] = find_root(parent, k);
  return label;
}

std::vector<std::size_t> fiber_labels(const std::vector<Triangulation>& all) {
  std::vector<PointX> images(all.size(), PointX(1, 2, {0, 2}));
  parallel_chunks(all.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) images[k] = f2_coloring(all[k]);
  });
  std::unordered_map<PointX, std::size_t, PointXHash> first;
  std::vector<std::size_t> label(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) label[k] = first.emplace(images[k], k).first->second;
  return label;
}

std::map<std::size_t, std::size_t> histogram(const std::vector<std::vector<Triangulation>>& parts) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& p : parts) ++h[p.size()];
  return h;
}

}  // namespace

const char* hex_move_kind_name(HexMoveKind kind) noexcept {
  switch (kind) {
    case HexMoveKind::ZigzagAToB: return "zigzag-a-to-b";
    case HexMoveKind::ZigzagBToA: return "zigzag-b-to-a";
    case HexMoveKind::TriangleOddToEven: return "triangle-odd-to-even";
    case HexMoveKind::TriangleEvenToOdd: return "triangle-even-to-odd";
  }
  return "?";
}

std::array<Diagonal, 3> HexMove::source() const { return realize(hexagon, source_chords(*this)); }

std::array<Diagonal, 3> HexMove::target() const { return realize(hexagon, target_chords(*this)); }

HexMove HexMove::inverse() const {
  HexMove inv = *this;
  switch (kind) {
    case HexMoveKind::ZigzagAToB: inv.kind = HexMoveKind::ZigzagBToA; break;
    case HexMoveKind::ZigzagBToA: inv.kind = HexMoveKind::ZigzagAToB; break;
    case HexMoveKind::TriangleOddToEven: inv.kind = HexMoveKind::TriangleEvenToOdd; break;
    case HexMoveKind::TriangleEvenToOdd: inv.kind = HexMoveKind::TriangleOddToEven; break;
  }
  return inv;
}

std::vector<HexMove> find_hex_moves(const Triangulation& t) {
  const auto adj = t.adjacency();
  const int m = t.m();
  std::vector<std::array<int, 6>> hexagons;
  std::array<int, 6> hex{};
  for (int start = 0; start + 5 <= m; ++start) {
    hex[0] = start;
    collect_hexagons(adj, hex, 1, hexagons);
  }

  std::vector<HexMove> moves;
  for (const auto& h : hexagons) {
    std::vector<HexMove> candidates;
    for (int a = 0; a < 3; ++a) {
      candidates.push_back({h, HexMoveKind::ZigzagAToB, a});
      candidates.push_back({h, HexMoveKind::ZigzagBToA, a});
    }
    candidates.push_back({h, HexMoveKind::TriangleOddToEven, 0});
    candidates.push_back({h, HexMoveKind::TriangleEvenToOdd, 0});
    for (const auto& mv : candidates) {
      const auto src = mv.source();
      if (std::all_of(src.begin(), src.end(), [&](Diagonal d) { return t.contains(d); })) {
        moves.push_back(mv);
        break;  // the hexagon's inner chords match at most one pattern
      }
    }
  }
  return moves;
}

Triangulation apply_hex_move(const Triangulation& t, const HexMove& mv) {
  const auto& h = mv.hexagon;
  for (int k = 0; k < 6; ++k)
    if (h[k] < 0 || h[k] > t.m() || (k && h[k] <= h[k - 1]))
      fail(ErrorCode::InvalidMove, "hexagon vertices must increase within 0..m");
  if (mv.axis < 0 || mv.axis > 2) fail(ErrorCode::InvalidMove, "axis must be 0, 1 or 2");
  if (!boundary_present(t.adjacency(), h))
    fail(ErrorCode::InvalidMove, "hexagon boundary is not made of sides and diagonals of T");
  const auto src = mv.source();
  for (const auto& d : src)
    if (!t.contains(d))
      fail(ErrorCode::InvalidMove, "(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                                       ") is not in the triangulation");
  std::vector<Diagonal> next;
  for (const auto& d : t.diagonals())
    if (std::find(src.begin(), src.end(), d) == src.end()) next.push_back(d);
  for (const auto& d : mv.target()) next.push_back(d);
  return Triangulation(t.m(), std::move(next));
}

std::vector<std::vector<Triangulation>> hex_classes(int m, bool force) {
  if (m > kHexClassesMaxM && !force)
    fail(ErrorCode::Resource, "hex_classes is limited to m <= " + std::to_string(kHexClassesMaxM));
  const auto all = enumerate_triangulations(m);
  return group_by(all, class_labels(all));
}

std::vector<std::vector<Triangulation>> coloring_fibers(int m) {
  const auto all = enumerate_triangulations(m);
  return group_by(all, fiber_labels(all));
}

TheoremReport verify_theorem_main(int m, bool force) {
  if (m > kTheoremMaxM && !force)
    fail(ErrorCode::Resource, "verify_theorem is limited to m <= " + std::to_string(kTheoremMaxM));
  const auto all = enumerate_triangulations(m);
  const auto classes = group_by(all, class_labels(all));
  const auto fibers = group_by(all, fiber_labels(all));
  TheoremReport r;
  r.m = m;
  r.triangulations = all.size();
  r.classes = classes.size();
  r.fibers = fibers.size();
  r.equal = classes == fibers;
  r.class_histogram = histogram(classes);
  r.fiber_histogram = histogram(fibers);
  return r;
}

std::optional<std::size_t> hex_distance(const Triangulation& from, const Triangulation& to,
                                        std::size_t max_steps) {
  if (from.m() != to.m()) fail(ErrorCode::InvalidArgument, "triangulations of different polygons");
  if (from == to) return 0;
  std::unordered_map<DiagonalMask, std::size_t> seen{{from.mask(), 0}};
  std::deque<Triangulation> queue{from};
  const auto goal = to.mask();
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    const auto d = seen.at(t.mask());
    if (d == max_steps) continue;
    for (const auto& mv : find_hex_moves(t)) {
      auto next = apply_hex_move(t, mv);
      auto key = next.mask();
      if (!seen.emplace(key, d + 1).second) continue;
      if (key == goal) return d + 1;
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace clusterf2
