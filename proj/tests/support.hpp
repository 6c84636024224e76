#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "clusterf2/coloring.hpp"
#include "clusterf2/polygon.hpp"
#include "oracles.hpp"

namespace support {

inline clusterf2::Triangulation tri(int m, std::initializer_list<std::pair<int, int>> ds) {
  std::vector<clusterf2::Diagonal> v;
  for (auto [a, b] : ds) v.push_back(clusterf2::make_diagonal(m, a, b));
  return clusterf2::Triangulation(m, std::move(v));
}

inline std::vector<oracle::Chord> chords(const clusterf2::Triangulation& t) {
  std::vector<oracle::Chord> out;
  for (const auto& d : t.diagonals()) out.emplace_back(d.i, d.j);
  return out;
}

inline clusterf2::Triangulation from_chords(int m, const std::vector<oracle::Chord>& cs) {
  std::vector<clusterf2::Diagonal> v;
  for (auto [a, b] : cs) v.push_back({a, b});
  return clusterf2::Triangulation(m, std::move(v));
}

inline clusterf2::PointX f2(std::vector<int> labels) {
  const int m = static_cast<int>(labels.size()) - 1;
  return clusterf2::PointX(m, 2, std::move(labels));
}

}  // namespace support
