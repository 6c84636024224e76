#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "clusterf2/error.hpp"
#include "clusterf2/polygon.hpp"
#include "support.hpp"

using namespace clusterf2;

TEST_CASE("diagonal indices enumerate all diagonals in lex order") {
  for (int m = 3; m <= kMaxPolygonM; ++m) {
    const auto ds = all_diagonals(m);
    CHECK(static_cast<int>(ds.size()) == diagonal_count(m));
    CHECK(ds.size() == oracle::diagonals(m).size());
    for (std::size_t k = 0; k < ds.size(); ++k) CHECK(diagonal_index(m, ds[k]) == static_cast<int>(k));
    CHECK(std::is_sorted(ds.begin(), ds.end()));
  }
  CHECK(diagonal_count(11) == 54);
}

TEST_CASE("is_diagonal excludes sides and the distinguished side") {
  CHECK(is_diagonal(5, 0, 2));
  CHECK(is_diagonal(5, 4, 1));
  CHECK_FALSE(is_diagonal(5, 0, 5));
  CHECK_FALSE(is_diagonal(5, 2, 3));
  CHECK_FALSE(is_diagonal(5, 3, 3));
  CHECK_FALSE(is_diagonal(5, 0, 6));
  CHECK_THROWS_AS(make_diagonal(5, 0, 5), Error);
}

TEST_CASE("crosses agrees with the interleaving oracle") {
  const int m = 9;
  const auto ds = all_diagonals(m);
  for (const auto& a : ds)
    for (const auto& b : ds) {
      CHECK(crosses(a, b) == oracle::chords_cross({a.i, a.j}, {b.i, b.j}));
      CHECK(crosses(a, b) == crosses(b, a));
    }
}

TEST_CASE("enumeration count follows the Catalan recurrence") {
  for (int m = 2; m <= 12; ++m)
    CHECK(enumerate_triangulations(m).size() == oracle::catalan(m - 1));
}

TEST_CASE("enumeration matches the subset-search oracle exactly") {
  for (int m = 2; m <= 8; ++m) {
    const auto all = enumerate_triangulations(m);
    const auto ref = oracle::triangulations(m);
    REQUIRE(all.size() == ref.size());
    for (std::size_t k = 0; k < all.size(); ++k) CHECK(support::chords(all[k]) == ref[k]);
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_triangulations(15), Error);
  try {
    enumerate_triangulations(15);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Resource);
  }
  CHECK_THROWS(enumerate_triangulations(1));
}

TEST_CASE("triangulation validation") {
  CHECK_NOTHROW(support::tri(5, {{0, 2}, {0, 3}, {0, 4}}));
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of([] { Triangulation(5, {{0, 2}, {1, 3}, {0, 4}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Triangulation(5, {{0, 2}, {0, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Triangulation(5, {{0, 2}, {0, 2}, {0, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Triangulation(5, {{0, 5}, {0, 2}, {0, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Triangulation(20, {}); }) == ErrorCode::InvalidParameter);
  // Input order does not matter.
  CHECK(Triangulation(5, {{0, 4}, {0, 2}, {0, 3}}) == support::tri(5, {{0, 2}, {0, 3}, {0, 4}}));
}

TEST_CASE("flip replaces one diagonal and is an involution") {
  for (int m = 3; m <= 8; ++m) {
    for (const auto& t : enumerate_triangulations(m)) {
      std::set<std::vector<Diagonal>> seen;
      for (const auto& d : t.diagonals()) {
        const auto u = flip(t, d);
        CHECK_FALSE(u.contains(d));
        int shared = 0;
        for (const auto& e : t.diagonals()) shared += u.contains(e);
        CHECK(shared == m - 3);
        // Re-validate through the checking constructor.
        CHECK_NOTHROW(Triangulation(m, {u.diagonals().begin(), u.diagonals().end()}));
        Diagonal added{};
        for (const auto& e : u.diagonals())
          if (!t.contains(e)) added = e;
        CHECK(flip(u, added) == t);
        seen.insert({u.diagonals().begin(), u.diagonals().end()});
      }
      CHECK(static_cast<int>(seen.size()) == m - 2);
    }
  }
  CHECK_THROWS_AS(flip(fan_triangulation(5, 0), {1, 3}), Error);
}

TEST_CASE("the flip graph is connected") {
  for (int m = 3; m <= 8; ++m) {
    const auto start = fan_triangulation(m, 0);
    std::set<Triangulation> seen{start};
    std::deque<Triangulation> queue{start};
    while (!queue.empty()) {
      const auto t = queue.front();
      queue.pop_front();
      for (const auto& d : t.diagonals()) {
        auto u = flip(t, d);
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
    CHECK(seen.size() == oracle::catalan(m - 1));
  }
}

TEST_CASE("faces of a triangulation") {
  for (int m = 2; m <= 8; ++m) {
    for (const auto& t : enumerate_triangulations(m)) {
      const auto faces = triangles(t);
      CHECK(static_cast<int>(faces.size()) == m - 1);
      const auto adj = t.adjacency();
      for (const auto& [a, b, c] : faces) {
        CHECK(a < b);
        CHECK(b < c);
        CHECK((adj[a] >> b & 1));
        CHECK((adj[b] >> c & 1));
        CHECK((adj[a] >> c & 1));
      }
    }
  }
}

TEST_CASE("fans") {
  for (int m = 3; m <= 9; ++m) {
    std::size_t fans = 0;
    for (const auto& t : enumerate_triangulations(m)) {
      CHECK(is_fan(t) == oracle::is_fan(support::chords(t)));
      fans += is_fan(t);
    }
    // One fan per vertex once the polygon has at least five vertices.
    if (m >= 4) CHECK(fans == static_cast<std::size_t>(m + 1));
  }
  CHECK(fan_triangulation(5, 2) == support::tri(5, {{0, 2}, {2, 4}, {2, 5}}));
}

TEST_CASE("quiver of a triangulation: pentagon seed") {
  const auto t = support::tri(5, {{0, 4}, {1, 4}, {1, 3}});
  const auto q = quiver_of(t);
  // Mutable ids follow sorted diagonals: (0,4)=1, (1,3)=2, (1,4)=3; frozen 4.
  CHECK(q.mutable_count() == 3);
  CHECK(q.frozen_count() == 1);
  const auto& arrows = q.arrows();
  const auto has = [&](int s, int d) { return std::find(arrows.begin(), arrows.end(), std::pair{s, d}) != arrows.end(); };
  CHECK(has(1, 3));  // (0,4) -> (1,4)
  CHECK(has(2, 3));  // (1,3) -> (1,4)
  CHECK((has(1, 4) || has(4, 1)));
  CHECK_FALSE(has(4, 2));
  CHECK_FALSE(has(2, 4));
  CHECK(arrows.size() == 3);
}

TEST_CASE("quiver of a triangulation has one arrow per face edge pair") {
  for (int m = 3; m <= 8; ++m)
    for (const auto& t : enumerate_triangulations(m)) {
      const auto q = quiver_of(t);
      std::size_t expected = 0;
      for (const auto& [a, b, c] : triangles(t)) {
        int inner = 0;
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}})
          inner += is_diagonal(m, x, y) || (x == 0 && y == m);
        expected += inner == 3 ? 3 : (inner == 2 ? 1 : 0);
      }
      CHECK(q.arrows().size() == expected);
    }
}
