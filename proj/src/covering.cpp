#include "clusterf2/covering.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "clusterf2/error.hpp"
#include "clusterf2/parallel.hpp"

namespace clusterf2 {
namespace {

bool is_special(int label, int q) noexcept { return label != kZeroColor && label != q; }

// Next pivot after prev: a label outside {0, inf} on odd steps, a 0 on even.
std::optional<int> next_pivot(const PointX& y, int prev, bool odd) {
  for (int i = prev + 1; i <= y.m() - 1; ++i) {
    if (odd ? is_special(y[i], y.q()) : y[i] == kZeroColor) return i;
  }
  return std::nullopt;
}

// Pivot sequence i_1, i_2, ... and which repair, if any, ends it.
struct PivotRun {
  std::vector<int> pivots;
  int repair = 0;  // 0: reached m-1, 1 or 2: the backtracking case
};

PivotRun run_pivots(const PointX& y) {
  PivotRun run;
  int prev = 0;
  for (int k = 1;; ++k) {
    const bool odd = k % 2 == 1;
    const auto found = next_pivot(y, prev, odd);
    if (!found) {
      if (k == 1) fail(ErrorCode::NoCover, "the alternating point lies in no cluster torus");
      run.repair = odd ? 2 : 1;
      return run;
    }
    run.pivots.push_back(*found);
    if (*found == y.m() - 1) return run;
    prev = *found;
  }
}

class DiagonalSet {
 public:
  explicit DiagonalSet(int m) : m_(m) {}
  void add(int a, int b) {
    if (a > b) std::swap(a, b);
    if (is_diagonal(m_, a, b)) ds_.push_back({a, b});
  }
  std::vector<Diagonal> take() {
    std::sort(ds_.begin(), ds_.end());
    ds_.erase(std::unique(ds_.begin(), ds_.end()), ds_.end());
    return std::move(ds_);
  }

 private:
  int m_;
  std::vector<Diagonal> ds_;
};

void check_cover_params(int m, int q) {
  if (m < 2 || m > kMaxPolygonM)
    fail(ErrorCode::InvalidParameter, "polygon parameter m=" + std::to_string(m) + " out of range");
  if (q < 2 || q > kMaxFieldSize)
    fail(ErrorCode::InvalidParameter, "field size q=" + std::to_string(q) + " out of range");
}

struct ChunkResult {
  std::size_t covered = 0;
  std::vector<PointX> uncovered;
  std::vector<PointAssignment> assignment;
};

}  // namespace

Triangulation algorithm_a(const PointX& y) {
  const int m = y.m();
  if (m < 2) fail(ErrorCode::InvalidParameter, "algorithm A needs m >= 2");
  const auto run = run_pivots(y);
  auto pivots = run.pivots;

  DiagonalSet ds(m);
  // A repair replaces the last step, so that step is never drawn.
  const std::size_t drawn = run.repair ? pivots.size() - 1 : pivots.size();
  for (std::size_t k = 0; k < drawn; ++k) {
    const int pivot = pivots[k];
    const int prev = k ? pivots[k - 1] : 0;
    ds.add(pivot, m);
    for (int j = prev; j < pivot; ++j) ds.add(pivot, j);
  }

  const int last = pivots.back();
  const int before = pivots.size() >= 2 ? pivots[pivots.size() - 2] : 0;
  if (run.repair == 1) {
    int ell = last - 1;
    while (y[ell] != kZeroColor) --ell;
    for (int j = ell + 1; j <= m - 1; ++j) ds.add(ell, j);
    for (int j = before; j <= ell; ++j) ds.add(m - 1, j);
  } else if (run.repair == 2) {
    for (int j = last; j <= m; ++j) ds.add(before, j);
    for (int j = before; j < last; ++j) ds.add(last, j);
  }
  return Triangulation(m, ds.take());
}

PointX algorithm_b(const PointX& y) {
  const int m = y.m();
  if (m < 2) fail(ErrorCode::InvalidParameter, "algorithm B needs m >= 2");
  constexpr int kInf = 2;
  const auto f2 = [&](int i) { return y[i] == y.q() ? kInf : y[i]; };
  const auto run = run_pivots(y);
  const auto& pivots = run.pivots;

  std::vector<int> z(static_cast<std::size_t>(m + 1), -1);
  z[0] = kZeroColor;
  z[m] = kInf;
  const std::size_t drawn = run.repair ? pivots.size() - 1 : pivots.size();
  for (std::size_t k = 0; k < drawn; ++k) {
    const int pivot = pivots[k];
    const int prev = k ? pivots[k - 1] : 0;
    if (k % 2 == 0) {
      z[pivot] = kOneColor;
      for (int i = prev + 1; i < pivot; ++i) z[i] = f2(i);
    } else {
      z[pivot] = kZeroColor;
      for (int i = prev + 1; i < pivot; ++i) z[i] = (i - prev) % 2 == 1 ? kInf : kOneColor;
    }
  }

  const int last = pivots.back();
  const int before = pivots.size() >= 2 ? pivots[pivots.size() - 2] : 0;
  if (run.repair == 1) {
    int ell = last - 1;
    while (y[ell] != kZeroColor) --ell;
    for (int i = before + 1; i <= ell; ++i) z[i] = f2(i);
    for (int i = ell + 1; i <= m; ++i) z[i] = (m - i) % 2 == 0 ? kInf : kOneColor;
  } else if (run.repair == 2) {
    for (int i = before; i < last; ++i) z[i] = (i - before) % 2 == 0 ? kOneColor : kInf;
    z[last] = kZeroColor;
    for (int i = last + 1; i <= m; ++i) z[i] = f2(i);
  }
  return PointX(m, 2, std::move(z));
}

CoverReport verify_covering(std::vector<Triangulation> cover, int m, int q, bool with_assignment) {
  check_cover_params(m, q);
  for (const auto& t : cover)
    if (t.m() != m)
      fail(ErrorCode::InvalidArgument, "cover member with m=" + std::to_string(t.m()) +
                                           ", expected m=" + std::to_string(m));
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());

  std::vector<DiagonalMask> masks;
  masks.reserve(cover.size());
  for (const auto& t : cover) masks.push_back(t.mask());

  const auto points = enumerate_nondeep_points(m, q);
  std::vector<ChunkResult> parts(chunk_count(points.size()));
  parallel_chunks(points.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& part = parts[c];
    for (std::size_t k = begin; k < end; ++k) {
      const auto eq = points[k].equal_label_mask();
      std::vector<std::size_t> members;
      for (std::size_t t = 0; t < masks.size(); ++t) {
        if ((masks[t] & eq).none()) {
          members.push_back(t);
          if (!with_assignment) break;
        }
      }
      if (members.empty())
        part.uncovered.push_back(points[k]);
      else
        ++part.covered;
      if (with_assignment) part.assignment.push_back({points[k], std::move(members)});
    }
  });

  CoverReport r;
  r.m = m;
  r.q = q;
  r.total_points = points.size();
  for (auto& part : parts) {
    r.covered_count += part.covered;
    for (auto& p : part.uncovered) r.uncovered.push_back(std::move(p));
    for (auto& a : part.assignment) r.assignment.push_back(std::move(a));
  }
  r.covering = r.uncovered.empty();

  // Minimality: each member must be the sole cover of some F_2 point.
  std::vector<char> needed(cover.size(), 0);
  for (const auto& z : enumerate_nondeep_points(m, 2)) {
    const auto eq = z.equal_label_mask();
    std::size_t hits = 0;
    std::size_t sole = 0;
    for (std::size_t t = 0; t < masks.size() && hits < 2; ++t)
      if ((masks[t] & eq).none()) {
        ++hits;
        sole = t;
      }
    if (hits == 1) needed[sole] = 1;
  }
  r.minimal = std::all_of(needed.begin(), needed.end(), [](char c) { return c != 0; });
  r.cover = std::move(cover);
  return r;
}

UpsilonCoverReport upsilon_cover(int m, int q, bool with_assignment, bool force) {
  check_cover_params(m, q);
  if (m > kUpsilonCoverMaxM && !force)
    fail(ErrorCode::Resource, "upsilon_cover is limited to m <= " + std::to_string(kUpsilonCoverMaxM));
  const auto points = enumerate_nondeep_points(m, q);
  std::vector<std::vector<Triangulation>> images(chunk_count(points.size()));
  std::vector<std::size_t> failures(images.size(), 0);
  parallel_chunks(points.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      auto t = algorithm_a(points[k]);
      if (algorithm_a(f2_coloring(t)) != t) ++failures[c];
      images[c].push_back(std::move(t));
    }
  });

  std::vector<Triangulation> cover;
  std::size_t composition_failures = 0;
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (auto& t : images[c]) cover.push_back(std::move(t));
    composition_failures += failures[c];
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());

  UpsilonCoverReport out;
  out.report = verify_covering(std::move(cover), m, q, with_assignment);
  out.expected_size = enumerate_nondeep_points(m, 2).size();
  out.size_matches = out.report.cover.size() == out.expected_size;
  out.composition_failures = composition_failures;
  return out;
}

PointX counterexample_witness(int q) {
  if (q < 3 || q > kMaxFieldSize)
    fail(ErrorCode::InvalidParameter, "the counterexample needs q >= 3 (got q=" + std::to_string(q) + ")");
  const int a = 1;
  const int b = 2;
  const int inf = q;
  return PointX(kCounterexampleM, q, {0, a, inf, a, b, 0, inf, b, a, 0, b, inf});
}

CounterexampleReport counterexample_cover(int q) {
  const PointX y = counterexample_witness(q);
  const int m = kCounterexampleM;
  const auto iy = invalid_diagonals(y);
  const auto iy_mask = invalid_diagonal_mask(y);

  const auto all = enumerate_triangulations(m);
  std::vector<DiagonalMask> masks;
  masks.reserve(all.size());
  for (const auto& t : all) masks.push_back(t.mask());

  const auto points = enumerate_nondeep_points(m, 2);
  // Per point: the chosen triangulation index, or none when not separated.
  std::vector<std::optional<std::size_t>> chosen(points.size());
  std::vector<char> separated(points.size(), 0);
  parallel_chunks(points.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto iz = invalid_diagonal_mask(points[k]);
      const auto diff = iy_mask & ~iz;
      if (diff.none()) continue;
      separated[k] = 1;
      std::size_t bit = 0;
      while (!diff.test(bit)) ++bit;
      const auto eq = points[k].equal_label_mask();
      for (std::size_t t = 0; t < all.size(); ++t) {
        if (masks[t].test(bit) && (masks[t] & eq).none()) {
          chosen[k] = t;
          break;
        }
      }
      if (!chosen[k]) fail(ErrorCode::Internal, "no triangulation through a valid diagonal");
    }
  });

  std::vector<Triangulation> cover;
  for (const auto& c : chosen)
    if (c) cover.push_back(all[*c]);
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());

  CounterexampleReport r{.witness = y,
                         .witness_invalid = iy,
                         .cover = {},
                         .f2_points = points.size(),
                         .separated_points = static_cast<std::size_t>(
                             std::count(separated.begin(), separated.end(), 1)),
                         .claims = {},
                         .survivors = 0,
                         .f2_report = {},
                         .witness_uncovered = false,
                         .members_admitting_witness = 0};

  // Claim chain: each stage fixes one more label of z; points that break it
  // are eliminated and must already be separated.
  constexpr int kInf = 2;
  const std::vector<std::pair<int, int>> stages{{6, kInf}, {2, kInf}, {1, 1}, {3, 1}, {5, 0},
                                                {4, kInf}, {7, 0},    {9, 0}, {10, 1}};
  std::vector<char> alive(points.size(), 1);
  for (const auto& [vertex, color] : stages) {
    ClaimStage stage{vertex, color, 0, 0};
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (!alive[k] || points[k][vertex] == color) continue;
      alive[k] = 0;
      ++stage.eliminated;
      if (separated[k]) ++stage.witnessed;
    }
    r.claims.push_back(stage);
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    if (alive[k] && !separated[k]) ++r.survivors;

  for (const auto& t : cover)
    if (is_proper(t, y)) ++r.members_admitting_witness;
  r.witness_uncovered = r.members_admitting_witness == 0;
  r.f2_report = verify_covering(cover, m, 2);
  r.cover = std::move(cover);
  return r;
}

}  // namespace clusterf2
