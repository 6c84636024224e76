#pragma once

// Covering sets of seeds for X'_F(m) = X_F(m) minus the alternating point.

#include <cstddef>
#include <string>
#include <vector>

#include "clusterf2/coloring.hpp"
#include "clusterf2/polygon.hpp"

namespace clusterf2 {

// Upsilon: a triangulation admitting y, built from alternating fans pivoting
// at the next non-{0,inf} label and the next 0 label, with the two
// backtracking repairs when no further pivot exists. Throws NoCover for the
// alternating point.
Triangulation algorithm_a(const PointX& y);

// The F_2 point c(Upsilon(y)), computed directly from the labels without
// building the triangulation.
PointX algorithm_b(const PointX& y);

struct PointAssignment {
  PointX point;
  std::vector<std::size_t> members;  // indices into CoverReport::cover
};

struct CoverReport {
  int m = 0;
  int q = 0;
  std::vector<Triangulation> cover;  // deduplicated, sorted
  std::size_t total_points = 0;      // |X'_F(m)|
  std::size_t covered_count = 0;
  std::vector<PointX> uncovered;
  bool covering = false;
  // Every member is the only member covering some point of X'_{F_2}(m).
  bool minimal = false;
  std::vector<PointAssignment> assignment;  // filled only when requested
};

CoverReport verify_covering(std::vector<Triangulation> cover, int m, int q,
                            bool with_assignment = false);

inline constexpr int kUpsilonCoverMaxM = 11;

struct UpsilonCoverReport {
  CoverReport report;
  std::size_t expected_size = 0;      // |X'_{F_2}(m)|
  bool size_matches = false;
  std::size_t composition_failures = 0;  // y with Upsilon(y) != Upsilon(c(Upsilon(y)))
  bool ok() const noexcept {
    return report.covering && report.minimal && size_matches &&
           composition_failures == 0;
  }
};

UpsilonCoverReport upsilon_cover(int m, int q, bool with_assignment = false,
                                 bool force = false);

inline constexpr int kCounterexampleM = 11;

// Stage of the elimination argument: under the earlier fixed labels, every
// z in X'_{F_2}(11) that violates this one still has I(y) not inside I(z).
struct ClaimStage {
  int vertex = 0;
  int color = 0;
  std::size_t eliminated = 0;
  std::size_t witnessed = 0;  // eliminated z with a diagonal in I(y) \ I(z)
};

struct CounterexampleReport {
  PointX witness;
  std::vector<Diagonal> witness_invalid;  // I(y)
  std::vector<Triangulation> cover;       // one T_z per z, deduplicated
  std::size_t f2_points = 0;              // |X'_{F_2}(11)|
  std::size_t separated_points = 0;       // z with I(y) not inside I(z)
  std::vector<ClaimStage> claims;
  std::size_t survivors = 0;              // z satisfying every claim and not separated
  CoverReport f2_report;                  // cover checked over F_2
  bool witness_uncovered = false;         // no member admits the witness
  std::size_t members_admitting_witness = 0;

  bool ok() const noexcept {
    return separated_points == f2_points && f2_report.covering &&
           witness_uncovered && members_admitting_witness == 0 &&
           survivors == 0;
  }
};

// Requires q >= 3 (a = 1, b = 2).
CounterexampleReport counterexample_cover(int q);

PointX counterexample_witness(int q);

}  // namespace clusterf2
