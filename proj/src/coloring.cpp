#include "clusterf2/coloring.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "clusterf2/error.hpp"
#include "clusterf2/parallel.hpp"

namespace clusterf2 {
namespace {

inline constexpr unsigned __int128 kMaxEnumeratedPoints = 50'000'000;

using ValueSet = unsigned __int128;  // bit v: label v occurs

int distinct(ValueSet s) noexcept {
  return std::popcount(static_cast<std::uint64_t>(s)) +
         std::popcount(static_cast<std::uint64_t>(s >> 64));
}

ValueSet bit(int v) noexcept { return ValueSet{1} << v; }

void check_params(int m, int q) {
  if (m < 1 || m > kMaxPolygonM)
    fail(ErrorCode::InvalidParameter,
         "polygon parameter m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxPolygonM));
  if (q < 2 || q > kMaxFieldSize)
    fail(ErrorCode::InvalidParameter,
         "field size q=" + std::to_string(q) + " outside 2.." + std::to_string(kMaxFieldSize));
}

unsigned __int128 point_count(int m, int q) {
  // Label sequences from 0 with adjacent entries distinct: total grows by q
  // per step, and those ending in q are the previous ones not ending in q.
  unsigned __int128 total = 1;
  unsigned __int128 ends_inf = 0;
  for (int k = 1; k <= m; ++k) {
    ends_inf = total - ends_inf;
    total *= static_cast<unsigned>(q);
  }
  return ends_inf;
}

void enumerate_rec(int m, int q, std::vector<int>& labels, std::vector<PointX>& out) {
  const std::size_t pos = labels.size();
  if (static_cast<int>(pos) == m) {
    if (labels.back() != q) {
      auto full = labels;
      full.push_back(q);
      out.emplace_back(m, q, std::move(full));
    }
    return;
  }
  for (int v = 0; v <= q; ++v) {
    if (v == labels.back()) continue;
    labels.push_back(v);
    enumerate_rec(m, q, labels, out);
    labels.pop_back();
  }
}

void require_same_m(const Triangulation& t, const PointX& y) {
  if (t.m() != y.m())
    fail(ErrorCode::InvalidArgument, "triangulation has m=" + std::to_string(t.m()) +
                                         " but point has m=" + std::to_string(y.m()));
}

}  // namespace

PointX::PointX(int m, int q, std::vector<int> labels) : m_(m), q_(q), labels_(std::move(labels)) {
  check_params(m, q);
  if (static_cast<int>(labels_.size()) != m + 1)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(m + 1) + " labels, got " +
                                         std::to_string(labels_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] < 0 || labels_[i] > q)
      fail(ErrorCode::InvalidArgument,
           "label " + std::to_string(labels_[i]) + " at " + std::to_string(i) + " outside 0.." +
               std::to_string(q));
  if (labels_.front() != kZeroColor) fail(ErrorCode::InvalidArgument, "labels[0] must be 0");
  if (labels_.back() != q)
    fail(ErrorCode::InvalidArgument, "labels[m] must be infinity (" + std::to_string(q) + ")");
  for (std::size_t i = 0; i + 1 < labels_.size(); ++i)
    if (labels_[i] == labels_[i + 1])
      fail(ErrorCode::InvalidArgument,
           "adjacent labels at " + std::to_string(i) + "," + std::to_string(i + 1) + " are equal");
}

bool PointX::is_alternating() const noexcept {
  if (m_ % 2 == 0) return false;
  for (int i = 0; i <= m_; ++i)
    if (labels_[i] != (i % 2 == 0 ? kZeroColor : q_)) return false;
  return true;
}

DiagonalMask PointX::equal_label_mask() const {
  DiagonalMask mask;
  for (int i = 0; i <= m_; ++i)
    for (int j = i + 2; j <= m_; ++j)
      if (is_diagonal(m_, i, j) && labels_[i] == labels_[j])
        mask.set(static_cast<std::size_t>(diagonal_index(m_, {i, j})));
  return mask;
}

std::size_t PointXHash::operator()(const PointX& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.m()) * 31u + static_cast<std::size_t>(p.q());
  for (int v : p.labels()) h = h * 0x100000001b3ull ^ static_cast<std::size_t>(v);
  return h;
}

PointX alternating_point(int m, int q) {
  check_params(m, q);
  if (m % 2 == 0)
    fail(ErrorCode::InvalidParameter, "no alternating point for even m=" + std::to_string(m));
  std::vector<int> labels(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) labels[i] = i % 2 == 0 ? kZeroColor : q;
  return PointX(m, q, std::move(labels));
}

std::vector<PointX> enumerate_points(int m, int q) {
  check_params(m, q);
  if (point_count(m, q) > kMaxEnumeratedPoints)
    fail(ErrorCode::Resource, "X_F(m) too large to enumerate for m=" + std::to_string(m) +
                                  ", q=" + std::to_string(q));
  std::vector<PointX> out;
  out.reserve(static_cast<std::size_t>(point_count(m, q)));
  std::vector<int> labels{kZeroColor};
  enumerate_rec(m, q, labels, out);
  return out;
}

std::vector<PointX> enumerate_nondeep_points(int m, int q) {
  auto all = enumerate_points(m, q);
  std::erase_if(all, [](const PointX& p) { return p.is_alternating(); });
  return all;
}

bool is_proper(const Triangulation& t, const PointX& y) {
  require_same_m(t, y);
  return std::all_of(t.diagonals().begin(), t.diagonals().end(),
                     [&](const Diagonal& d) { return y[d.i] != y[d.j]; });
}

PointX f2_coloring(const Triangulation& t) {
  const int m = t.m();
  const auto faces = triangles(t);
  constexpr int kInf = 2;
  std::vector<int> labels(static_cast<std::size_t>(m + 1), -1);
  labels[0] = kZeroColor;
  labels[m] = kInf;

  // Faces sharing an edge are neighbours; walk them breadth-first.
  std::vector<bool> done(faces.size(), false);
  std::deque<std::size_t> queue;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& [a, b, c] = faces[f];
    if (a == 0 && c == m) {
      queue.push_back(f);
      done[f] = true;
      break;
    }
  }
  if (queue.empty()) fail(ErrorCode::Internal, "no face on the distinguished side");

  const auto shares_edge = [](const std::array<int, 3>& x, const std::array<int, 3>& y) {
    int common = 0;
    for (int u : x)
      for (int v : y) common += u == v;
    return common == 2;
  };

  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    int missing = -1;
    int used = 0;
    for (int v : faces[f]) {
      if (labels[v] < 0) {
        if (missing >= 0) fail(ErrorCode::Internal, "face reached with two uncoloured vertices");
        missing = v;
      } else {
        used |= 1 << labels[v];
      }
    }
    if (missing >= 0) {
      if (std::popcount(static_cast<unsigned>(used)) != 2)
        fail(ErrorCode::Internal, "improper colouring during propagation");
      labels[missing] = std::countr_zero(static_cast<unsigned>(~used & 7));
    } else if (used != 7) {
      fail(ErrorCode::Internal, "improper colouring during propagation");
    }
    for (std::size_t g = 0; g < faces.size(); ++g) {
      if (!done[g] && shares_edge(faces[f], faces[g])) {
        done[g] = true;
        queue.push_back(g);
      }
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end())
    fail(ErrorCode::Internal, "propagation left a vertex uncoloured");
  return PointX(m, 2, std::move(labels));
}

DiagonalMask invalid_diagonal_mask(const PointX& y) {
  const int m = y.m();
  // prefix[k]: labels of 0..k; suffix[k]: labels of k..m.
  std::vector<ValueSet> prefix(static_cast<std::size_t>(m + 1));
  std::vector<ValueSet> suffix(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) prefix[k] = (k ? prefix[k - 1] : 0) | bit(y[k]);
  for (int k = m; k >= 0; --k) suffix[k] = (k < m ? suffix[k + 1] : 0) | bit(y[k]);

  DiagonalMask mask;
  for (int i = 0; i <= m; ++i) {
    ValueSet inner = bit(y[i]);
    for (int j = i + 1; j <= m; ++j) {
      inner |= bit(y[j]);
      if (!is_diagonal(m, i, j)) continue;
      const ValueSet outer = prefix[i] | suffix[j];
      if (y[i] == y[j] || distinct(inner) <= 2 || distinct(outer) <= 2)
        mask.set(static_cast<std::size_t>(diagonal_index(m, {i, j})));
    }
  }
  return mask;
}

std::vector<Diagonal> invalid_diagonals(const PointX& y) {
  const auto mask = invalid_diagonal_mask(y);
  std::vector<Diagonal> out;
  for (const auto& d : all_diagonals(y.m()))
    if (mask.test(static_cast<std::size_t>(diagonal_index(y.m(), d)))) out.push_back(d);
  return out;
}

bool is_valid_diagonal(const PointX& y, Diagonal d) {
  if (d.i > d.j) std::swap(d.i, d.j);
  if (!is_diagonal(y.m(), d.i, d.j))
    fail(ErrorCode::NotADiagonal, "(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                                      ") is not a diagonal of P_" + std::to_string(y.m() + 1));
  return !invalid_diagonal_mask(y).test(static_cast<std::size_t>(diagonal_index(y.m(), d)));
}

bool admits_some_triangulation(const PointX& y) {
  const int m = y.m();
  if (m < 2) return true;
  // ok[i][j]: the sub-polygon i..j has a triangulation whose chords all
  // join distinct labels.
  std::vector<std::vector<char>> ok(static_cast<std::size_t>(m + 1),
                                    std::vector<char>(static_cast<std::size_t>(m + 1), 0));
  for (int i = 0; i < m; ++i) ok[i][i + 1] = 1;
  for (int len = 2; len <= m; ++len) {
    for (int i = 0; i + len <= m; ++i) {
      const int j = i + len;
      for (int k = i + 1; k < j && !ok[i][j]; ++k) {
        if (!ok[i][k] || !ok[k][j]) continue;
        if (k - i >= 2 && y[i] == y[k]) continue;
        if (j - k >= 2 && y[k] == y[j]) continue;
        ok[i][j] = 1;
      }
    }
  }
  return ok[0][m] != 0;
}

std::vector<PointX> deep_points(int m, int q, bool force) {
  check_params(m, q);
  if (m > kDeepPointsMaxM && !force)
    fail(ErrorCode::Resource, "deep_points is limited to m <= " + std::to_string(kDeepPointsMaxM));
  const auto points = enumerate_points(m, q);
  std::vector<std::vector<PointX>> found(chunk_count(points.size()));
  parallel_chunks(points.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      if (!admits_some_triangulation(points[k])) found[c].push_back(points[k]);
  });
  std::vector<PointX> out;
  for (auto& part : found)
    for (auto& p : part) out.push_back(std::move(p));
  return out;
}

}  // namespace clusterf2
