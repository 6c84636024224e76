#pragma once

// Labelings of P_{m+1} by colors of P^1(F_q): the points of X_F(m).
//
// Color encoding: 0 is the zero color [1:0], q is infinity [0:1], and
// 1..q-1 are the remaining colors. For q = 2, color 1 is [1:1].

#include <cstddef>
#include <vector>

#include "clusterf2/polygon.hpp"

namespace clusterf2 {

inline constexpr int kZeroColor = 0;
inline constexpr int kOneColor = 1;
inline constexpr int kMaxFieldSize = 64;

constexpr int infinity_color(int q) noexcept { return q; }

class PointX {
 public:
  // Validates labels[0] = 0, labels[m] = q, adjacent labels distinct, all
  // labels in 0..q.
  PointX(int m, int q, std::vector<int> labels);

  int m() const noexcept { return m_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int operator[](std::size_t i) const noexcept { return labels_[i]; }

  int infinity() const noexcept { return q_; }

  // The alternating point (0,inf,0,inf,...,0,inf); only exists for odd m.
  bool is_alternating() const noexcept;

  // Bit diagonal_index(m, d) is set when d joins two equal labels.
  DiagonalMask equal_label_mask() const;

  friend bool operator==(const PointX&, const PointX&) = default;
  friend auto operator<=>(const PointX& a, const PointX& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  int m_;
  int q_;
  std::vector<int> labels_;
};

struct PointXHash {
  std::size_t operator()(const PointX& p) const noexcept;
};

PointX alternating_point(int m, int q);

// All of X_{F_q}(m), lexicographic on label sequences.
std::vector<PointX> enumerate_points(int m, int q);

// X'_{F_q}(m): enumerate_points minus the alternating point.
std::vector<PointX> enumerate_nondeep_points(int m, int q);

// y lies in the cluster torus of t: labels differ across every diagonal.
bool is_proper(const Triangulation& t, const PointX& y);

// The map c: the unique proper labeling by {0, 1, inf} over F_2, found by
// propagating through triangles breadth-first from the one on side (m,0).
PointX f2_coloring(const Triangulation& t);

// I(y): diagonals with equal end labels or cutting off a sub-polygon
// (endpoints included) whose labels take only two values.
std::vector<Diagonal> invalid_diagonals(const PointX& y);
DiagonalMask invalid_diagonal_mask(const PointX& y);

bool is_valid_diagonal(const PointX& y, Diagonal d);

// Some triangulation admits y. Interval DP over sub-polygons.
bool admits_some_triangulation(const PointX& y);

inline constexpr int kDeepPointsMaxM = 10;

// Points of X_{F_q}(m) admitted by no triangulation.
std::vector<PointX> deep_points(int m, int q, bool force = false);

}  // namespace clusterf2
