#pragma once

// Reference implementations used only by the tests. Each one is written
// from the definitions, without the library's bitmask shortcuts or
// propagation tricks, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Chord = std::pair<int, int>;
using Labels = std::vector<int>;

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

// Walks on K_{q+1} from label 0 to label q in m steps: entry (0, q) of
// (J - I)^m.
inline std::uint64_t transfer_matrix_points(int m, int q) {
  const int n = q + 1;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n), 0);
  row[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) next[b] += row[a];
    row = std::move(next);
  }
  return row[q];
}

// Every labeling of 0..m by 0..q with the boundary conditions, by counting
// through all (q+1)^(m+1) words.
inline std::vector<Labels> brute_labelings(int m, int q) {
  std::vector<Labels> out;
  Labels w(static_cast<std::size_t>(m + 1), 0);
  std::uint64_t total = 1;
  for (int i = 0; i <= m; ++i) total *= static_cast<std::uint64_t>(q + 1);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = m; i >= 0; --i) {
      w[i] = static_cast<int>(c % static_cast<std::uint64_t>(q + 1));
      c /= static_cast<std::uint64_t>(q + 1);
    }
    if (w[0] != 0 || w[m] != q) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = w[i] != w[i + 1];
    if (ok) out.push_back(w);
  }
  return out;
}

inline bool chords_cross(Chord a, Chord b) {
  const auto [p, q] = a;
  const auto [r, s] = b;
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

inline std::vector<Chord> diagonals(int m) {
  std::vector<Chord> out;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      if (!(i == 0 && j == m)) out.emplace_back(i, j);
  return out;
}

// All maximal non-crossing chord sets, found by choosing m-2 pairwise
// non-crossing diagonals in every possible way.
inline std::vector<std::vector<Chord>> triangulations(int m) {
  const auto all = diagonals(m);
  std::vector<std::vector<Chord>> out;
  std::vector<Chord> cur;
  const int need = m - 2;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == need) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < all.size(); ++k) {
      if (std::any_of(cur.begin(), cur.end(), [&](Chord c) { return chords_cross(c, all[k]); }))
        continue;
      cur.push_back(all[k]);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool proper(const std::vector<Chord>& t, const Labels& y) {
  return std::all_of(t.begin(), t.end(), [&](Chord c) { return y[c.first] != y[c.second]; });
}

// The F_2 labels admitted by t, among all q=2 labelings.
inline std::vector<Labels> proper_f2_labelings(int m, const std::vector<Chord>& t) {
  std::vector<Labels> out;
  for (const auto& y : brute_labelings(m, 2))
    if (proper(t, y)) out.push_back(y);
  return out;
}

// d is usable for y: some triangulation through d admits y.
inline bool existential_valid(const std::vector<std::vector<Chord>>& tris, const Labels& y, Chord d) {
  for (const auto& t : tris)
    if (std::find(t.begin(), t.end(), d) != t.end() && proper(t, y)) return true;
  return false;
}

inline bool admitted(const std::vector<std::vector<Chord>>& tris, const Labels& y) {
  return std::any_of(tris.begin(), tris.end(), [&](const auto& t) { return proper(t, y); });
}

inline bool is_fan(const std::vector<Chord>& t) {
  if (t.empty()) return true;
  for (int v : {t.front().first, t.front().second})
    if (std::all_of(t.begin(), t.end(), [v](Chord c) { return c.first == v || c.second == v; }))
      return true;
  return false;
}

inline Labels alternating(int m, int q) {
  Labels y(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) y[i] = i % 2 == 0 ? 0 : q;
  return y;
}

// Exhaustive F_2 solution count of the exchange relations
//   x_k x'_k = prod_{k->j} x_j + prod_{i->k} x_i
// over all 2^(2n) assignments (frozen values fixed to 1).
inline std::uint64_t brute_exchange_count(int n, const std::vector<Chord>& arrows) {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x)
    for (std::uint32_t xp = 0; xp < (1u << n); ++xp) {
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        int out_prod = 1;
        int in_prod = 1;
        for (const auto& [s, t] : arrows) {
          if (s == k) out_prod &= static_cast<int>(x >> t & 1);
          if (t == k) in_prod &= static_cast<int>(x >> s & 1);
        }
        const int lhs = static_cast<int>((x >> k & 1) & (xp >> k & 1));
        ok = lhs == ((out_prod + in_prod) & 1);
      }
      if (ok) ++count;
    }
  return count;
}

}  // namespace oracle
