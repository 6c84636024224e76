#include "clusterf2/polygon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>

#include "clusterf2/error.hpp"

namespace clusterf2 {
namespace {

inline constexpr int kMaxEnumerateM = 14;

void check_m(int m) {
  if (m < 2 || m > kMaxPolygonM)
    fail(ErrorCode::InvalidParameter,
         "polygon parameter m=" + std::to_string(m) + " outside 2.." +
             std::to_string(kMaxPolygonM));
}

std::string describe(Diagonal d) {
  return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")";
}

// Apexes of the two faces on d: one strictly inside (i, j), one outside.
std::pair<int, int> adjacent_apexes(const std::vector<std::uint64_t>& adj, Diagonal d) {
  std::uint64_t common = adj[d.i] & adj[d.j];
  int inner = -1;
  int outer = -1;
  while (common) {
    const int k = std::countr_zero(common);
    common &= common - 1;
    if (k > d.i && k < d.j)
      inner = k;
    else
      outer = k;
  }
  if (inner < 0 || outer < 0)
    fail(ErrorCode::Internal, "diagonal " + describe(d) + " lacks two adjacent triangles");
  return {inner, outer};
}

void enumerate_rec(std::vector<std::pair<int, int>>& pending, std::vector<Diagonal>& current,
                   int m, std::vector<Triangulation>& out) {
  if (pending.empty()) {
    out.push_back(make_unchecked(m, current));
    return;
  }
  const auto [i, j] = pending.back();
  pending.pop_back();
  if (j - i < 2) {
    enumerate_rec(pending, current, m, out);
  } else {
    for (int k = i + 1; k < j; ++k) {
      const std::size_t mark = current.size();
      if (k - i >= 2) current.push_back({i, k});
      if (j - k >= 2) current.push_back({k, j});
      pending.emplace_back(i, k);
      pending.emplace_back(k, j);
      enumerate_rec(pending, current, m, out);
      pending.pop_back();
      pending.pop_back();
      current.resize(mark);
    }
  }
  pending.emplace_back(i, j);
}

}  // namespace

bool is_diagonal(int m, int a, int b) noexcept {
  if (a > b) std::swap(a, b);
  if (a < 0 || b > m) return false;
  if (b - a < 2) return false;
  return !(a == 0 && b == m);
}

Diagonal make_diagonal(int m, int a, int b) {
  if (!is_diagonal(m, a, b))
    fail(ErrorCode::NotADiagonal, "(" + std::to_string(a) + "," + std::to_string(b) +
                                      ") is not a diagonal of P_" + std::to_string(m + 1));
  return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

bool crosses(Diagonal d1, Diagonal d2) noexcept {
  const auto strictly_inside = [&](int v) { return v > d1.i && v < d1.j; };
  const auto on_boundary = [&](int v) { return v == d1.i || v == d1.j; };
  if (on_boundary(d2.i) || on_boundary(d2.j)) return false;
  return strictly_inside(d2.i) != strictly_inside(d2.j);
}

int diagonal_count(int m) noexcept { return m < 3 ? 0 : (m + 1) * (m - 2) / 2; }

int diagonal_index(int m, Diagonal d) noexcept {
  if (d.i == 0) return d.j - 2;
  const int i = d.i;
  const int offset = (m - 2) + (i - 1) * (m - 1) - (i - 1) * i / 2;
  return offset + (d.j - i - 2);
}

std::vector<Diagonal> all_diagonals(int m) {
  std::vector<Diagonal> out;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      if (is_diagonal(m, i, j)) out.push_back({i, j});
  return out;
}

Triangulation::Triangulation(int m, std::vector<Diagonal> diagonals) : m_(m) {
  check_m(m);
  for (const auto& d : diagonals) {
    if (d.i >= d.j || !is_diagonal(m, d.i, d.j))
      fail(ErrorCode::InvalidArgument,
           describe(d) + " is not a normalized diagonal of P_" + std::to_string(m + 1));
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
    fail(ErrorCode::InvalidArgument, "repeated diagonal");
  if (static_cast<int>(diagonals.size()) != m - 2)
    fail(ErrorCode::InvalidArgument, "a triangulation of P_" + std::to_string(m + 1) +
                                         " has " + std::to_string(m - 2) + " diagonals, got " +
                                         std::to_string(diagonals.size()));
  for (std::size_t a = 0; a < diagonals.size(); ++a)
    for (std::size_t b = a + 1; b < diagonals.size(); ++b)
      if (crosses(diagonals[a], diagonals[b]))
        fail(ErrorCode::InvalidArgument,
             describe(diagonals[a]) + " crosses " + describe(diagonals[b]));
  diagonals_ = std::move(diagonals);
}

Triangulation make_unchecked(int m, std::vector<Diagonal> diagonals) {
  std::sort(diagonals.begin(), diagonals.end());
  return Triangulation(Triangulation::Unchecked{}, m, std::move(diagonals));
}

bool Triangulation::contains(Diagonal d) const noexcept {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

DiagonalMask Triangulation::mask() const {
  DiagonalMask mask;
  for (const auto& d : diagonals_) mask.set(static_cast<std::size_t>(diagonal_index(m_, d)));
  return mask;
}

std::vector<std::uint64_t> Triangulation::adjacency() const {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(m_ + 1), 0);
  const auto link = [&](int a, int b) {
    adj[a] |= std::uint64_t{1} << b;
    adj[b] |= std::uint64_t{1} << a;
  };
  for (int v = 0; v < m_; ++v) link(v, v + 1);
  link(m_, 0);
  for (const auto& d : diagonals_) link(d.i, d.j);
  return adj;
}

std::size_t TriangulationHash::operator()(const Triangulation& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.m()) * 0x9e3779b97f4a7c15ull;
  for (const auto& d : t.diagonals()) {
    const std::size_t v = static_cast<std::size_t>(d.i) * 131u + static_cast<std::size_t>(d.j);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Triangulation> enumerate_triangulations(int m) {
  check_m(m);
  if (m > kMaxEnumerateM)
    fail(ErrorCode::Resource, "enumeration is limited to m <= " + std::to_string(kMaxEnumerateM));
  std::vector<Triangulation> out;
  std::vector<std::pair<int, int>> pending{{0, m}};
  std::vector<Diagonal> current;
  current.reserve(static_cast<std::size_t>(m));
  enumerate_rec(pending, current, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation flip(const Triangulation& t, Diagonal d) {
  if (!t.contains(d))
    fail(ErrorCode::NotADiagonal, describe(d) + " is not a diagonal of the triangulation");
  const auto [inner, outer] = adjacent_apexes(t.adjacency(), d);
  std::vector<Diagonal> next;
  next.reserve(t.diagonals().size());
  for (const auto& e : t.diagonals())
    if (e != d) next.push_back(e);
  next.push_back(make_diagonal(t.m(), inner, outer));
  return make_unchecked(t.m(), std::move(next));
}

std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  const auto adj = t.adjacency();
  std::vector<std::array<int, 3>> out;
  const int m = t.m();
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (!(adj[a] >> b & 1)) continue;
      std::uint64_t common = adj[a] & adj[b] & ~((std::uint64_t{2} << b) - 1);
      while (common) {
        const int c = std::countr_zero(common);
        common &= common - 1;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

Triangulation fan_triangulation(int m, int apex) {
  check_m(m);
  if (apex < 0 || apex > m)
    fail(ErrorCode::InvalidParameter, "fan apex " + std::to_string(apex) + " out of range");
  std::vector<Diagonal> ds;
  for (int v = 0; v <= m; ++v)
    if (is_diagonal(m, apex, v)) ds.push_back(make_diagonal(m, apex, v));
  return make_unchecked(m, std::move(ds));
}

bool is_fan(const Triangulation& t) {
  const auto ds = t.diagonals();
  if (ds.empty()) return true;
  for (int v : {ds.front().i, ds.front().j}) {
    if (std::all_of(ds.begin(), ds.end(),
                    [v](const Diagonal& d) { return d.i == v || d.j == v; }))
      return true;
  }
  return false;
}

IceQuiver quiver_of(const Triangulation& t) {
  const int m = t.m();
  const auto ds = t.diagonals();
  const int frozen_id = static_cast<int>(ds.size()) + 1;

  std::map<std::pair<int, int>, int> edge_id;
  std::vector<QuiverVertex> vertices;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    edge_id[{ds[k].i, ds[k].j}] = static_cast<int>(k) + 1;
    vertices.push_back({static_cast<int>(k) + 1, false});
  }
  edge_id[{0, m}] = frozen_id;
  vertices.push_back({frozen_id, true});

  const auto id_of = [&](int a, int b) {
    auto it = edge_id.find({a, b});
    return it == edge_id.end() ? 0 : it->second;
  };

  // Vertices of a face a<b<c run clockwise, so counterclockwise the edges
  // come in the order (b,c) -> (a,b) -> (a,c) -> (b,c).
  std::vector<std::pair<int, int>> arrows;
  for (const auto& [a, b, c] : triangles(t)) {
    const int bc = id_of(b, c);
    const int ab = id_of(a, b);
    const int ac = id_of(a, c);
    if (bc && ab) arrows.emplace_back(bc, ab);
    if (ab && ac) arrows.emplace_back(ab, ac);
    if (ac && bc) arrows.emplace_back(ac, bc);
  }
  std::sort(arrows.begin(), arrows.end());
  return IceQuiver(std::move(vertices), std::move(arrows));
}

}  // namespace clusterf2
