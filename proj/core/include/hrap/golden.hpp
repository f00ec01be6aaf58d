#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

// Frozen reference values for the built-in polytope, recorded from the
// first full computation and cross-checked against an independent
// implementation. Regression checks compare against these so that even
// quantities with no externally stated value stay pinned.

namespace hrap::golden {

inline constexpr int kFacetCount = 48;
inline constexpr long long kGramPairCount = 1128;

// Off-diagonal Gram values with multiplicities, ascending.
inline constexpr std::array<std::pair<int, long long>, 6> kGramHistogram{{
    {-5, 16}, {-4, 96}, {-3, 48}, {-2, 392}, {-1, 232}, {0, 344}}};

inline constexpr long long kCommutingPairCount = 344;

// Pairwise position counts seen from one facet (intersecting, parallel,
// ultraparallel). Walls are the first two families, edges the third.
inline constexpr std::array<int, 3> kWallPositionCounts{19, 15, 13};
inline constexpr std::array<int, 3> kEdgePositionCounts{12, 7, 28};

// Ridge-count verification targets, and the counts this construction
// actually yields. The verification against the targets fails; the
// computed values are double-checked by an independent face count and by
// the incidence identity 16*19 + 32*12 = 2 * 344 (ridges counted twice).
inline constexpr int kRidgeTargetWall = 24;
inline constexpr int kRidgeTargetEdge = 10;
inline constexpr int kRidgeComputedWall = 19;
inline constexpr int kRidgeComputedEdge = 12;

inline constexpr long long kVertexCount = 122;
inline constexpr long long kFiniteVertexCount = 64;
inline constexpr long long kIdealVertexCount = 58;

inline constexpr std::array<long long, 5> kFVector{122, 624, 800, 344, 48};

// Faces of each dimension 0..4 on a single facet, by family.
inline constexpr std::array<long long, 5> kWallFaceCounts{23, 76, 72, 19, 1};
inline constexpr std::array<long long, 5> kEdgeFaceCounts{13, 40, 39, 12, 1};

inline constexpr long long kSymmetryOrder = 768;
inline constexpr long long kCubeActionImageOrder = 384;
inline constexpr long long kCubeActionKernelOrder = 2;
inline constexpr std::array<long long, 2> kFacetOrbitSizes{16, 32};

inline constexpr long long kStrictMaximalSetCount = 1304;
inline constexpr long long kStrictOrbitCount = 10;
inline constexpr long long kWeakMaximalSetCount = 5272;
inline constexpr long long kWeakOrbitCount = 34;

// Maximal-set size histograms (size, count), ascending.
inline constexpr std::array<std::pair<int, long long>, 6> kStrictSizeHistogram{{
    {2, 8}, {3, 96}, {4, 136}, {5, 768}, {6, 288}, {8, 8}}};
inline constexpr std::array<std::pair<int, long long>, 6> kWeakSizeHistogram{{
    {4, 108}, {5, 864}, {6, 1568}, {7, 2256}, {8, 460}, {10, 16}}};

// Constraint ranks that appear in the determination audit across every
// strict-mode maximal set (both are at least the dimension, 5).
inline constexpr std::array<int, 2> kAuditRanksSeen{5, 6};

inline constexpr long long kFootprintPlaneCount = 8;
inline constexpr long long kFootprintSphereCount = 40;

// Incident facets of the ideal vertex over the boundary point (1,1,1,1),
// sorted by label.
inline const std::vector<std::string>& corner_ideal_vertex_facets() {
  static const std::vector<std::string> v{"S(0,1,1,1)", "S(1,0,1,1)", "S(1,1,0,1)", "S(1,1,1,0)", "W+", "X+", "Y+", "Z+"};
  return v;
}

// Census orbits as (representative labels, orbit size). Representatives
// are the lexicographically least member by facet index.
using CensusGolden =
    std::vector<std::pair<std::vector<std::string>, long long>>;

inline const CensusGolden& strict_census_orbits() {
  static const CensusGolden v{
      {{"X+", "S_X-"}, 8},
      {{"X+", "S(-1,1,1,0)", "S(-1,0,-1,1)", "S(-1,-1,0,-1)"}, 128},
      {{"X+", "S(-1,1,1,0)", "S(-1,-1,-1,0)"}, 96},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(0,1,-1,-1)", "S(0,-1,1,1)", "S(-1,1,0,1)", "S(-1,0,1,-1)", "S(-1,-1,-1,0)"}, 8},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(0,1,-1,-1)", "S(-1,1,0,1)", "S(-1,-1,1,0)"}, 192},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(-1,1,0,1)", "S(-1,0,-1,-1)", "S(-1,-1,1,0)"}, 96},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(-1,1,0,-1)", "S(-1,-1,1,0)"}, 192},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(-1,1,0,-1)", "S(-1,-1,0,1)"}, 192},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(0,1,-1,-1)", "S(0,-1,1,-1)", "S(-1,-1,0,1)"}, 384},
      {{"S(1,1,1,0)", "S(1,-1,-1,0)", "S(-1,1,-1,0)", "S(-1,-1,1,0)"}, 8},
  };
  return v;
}

inline const CensusGolden& weak_census_orbits() {
  static const CensusGolden v{
      {{"X+", "X-", "S_Y+", "S_Y-"}, 12},
      {{"X+", "X-", "S_Y+", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)"}, 48},
      {{"X+", "X-", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,1,-1,1)", "S(0,1,-1,-1)", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)"}, 8},
      {{"X+", "S_X-", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,1,-1,1)", "S(0,1,-1,-1)", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)"}, 8},
      {{"X+", "S_Y+", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(0,-1,-1,1)", "S(-1,0,-1,-1)"}, 384},
      {{"X+", "S_Y+", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(-1,0,-1,1)", "S(-1,0,-1,-1)"}, 192},
      {{"X+", "S_Y+", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(-1,-1,-1,0)"}, 384},
      {{"X+", "S_Y+", "S(0,-1,1,1)", "S(0,-1,-1,-1)", "S(-1,0,1,-1)", "S(-1,0,-1,1)"}, 96},
      {{"X+", "S_Y+", "S(0,-1,1,1)", "S(-1,0,1,-1)", "S(-1,-1,-1,0)"}, 384},
      {{"X+", "S_Y+", "S(-1,-1,1,0)", "S(-1,-1,-1,0)"}, 96},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,1,-1,1)", "S(0,1,-1,-1)", "S(0,-1,1,1)", "S(0,-1,1,-1)", "S(-1,-1,-1,0)"}, 192},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,1,-1,1)", "S(0,1,-1,-1)", "S(-1,-1,1,0)", "S(-1,-1,-1,0)"}, 192},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,1,-1,1)", "S(0,-1,1,-1)", "S(-1,0,-1,-1)", "S(-1,-1,0,1)"}, 384},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)", "S(-1,1,-1,0)", "S(-1,-1,1,0)"}, 96},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(-1,1,-1,0)", "S(-1,-1,1,0)", "S(-1,-1,-1,0)"}, 192},
      {{"X+", "S(0,1,1,1)", "S(0,1,1,-1)", "S(-1,1,-1,0)", "S(-1,-1,0,1)", "S(-1,-1,0,-1)"}, 384},
      {{"X+", "S(0,1,1,1)", "S(0,-1,-1,-1)", "S(-1,1,0,-1)", "S(-1,0,-1,1)", "S(-1,-1,1,0)"}, 128},
      {{"X+", "S(-1,1,1,0)", "S(-1,1,-1,0)", "S(-1,-1,0,1)", "S(-1,-1,0,-1)"}, 96},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(1,-1,-1,0)", "S(-1,1,1,0)", "S(-1,1,-1,0)", "S(-1,-1,0,1)", "S(-1,-1,0,-1)"}, 48},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(1,-1,-1,0)", "S(-1,1,1,0)", "S(-1,0,-1,1)", "S(-1,-1,0,-1)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(1,-1,-1,0)", "S(-1,1,0,1)", "S(-1,1,0,-1)", "S(-1,-1,0,1)", "S(-1,-1,0,-1)"}, 24},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(1,-1,-1,0)", "S(-1,1,0,1)", "S(-1,0,1,-1)", "S(-1,0,-1,-1)", "S(-1,-1,0,1)"}, 48},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)", "S(-1,1,0,1)", "S(-1,1,0,-1)", "S(-1,-1,1,0)"}, 96},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(0,-1,-1,1)", "S(0,-1,-1,-1)", "S(-1,1,0,1)", "S(-1,0,1,-1)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(0,-1,-1,1)", "S(-1,1,0,1)", "S(-1,1,0,-1)", "S(-1,-1,0,-1)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(0,-1,-1,1)", "S(-1,1,0,1)", "S(-1,0,1,-1)", "S(-1,0,-1,-1)"}, 384},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,1,0)", "S(0,-1,-1,1)", "S(-1,1,0,1)", "S(-1,0,-1,-1)", "S(-1,-1,1,0)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,0,1)", "S(1,-1,0,-1)", "S(-1,1,0,1)", "S(-1,1,0,-1)", "S(-1,-1,1,0)", "S(-1,-1,-1,0)"}, 12},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,0,1)", "S(1,-1,0,-1)", "S(-1,1,0,1)", "S(-1,0,1,-1)", "S(-1,-1,-1,0)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,0,1)", "S(0,-1,1,-1)", "S(0,-1,-1,-1)", "S(-1,1,0,-1)", "S(-1,0,1,1)", "S(-1,0,-1,1)"}, 32},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(1,-1,0,1)", "S(0,-1,1,-1)", "S(-1,1,0,-1)", "S(-1,0,1,1)", "S(-1,-1,-1,0)"}, 192},
      {{"S(1,1,1,0)", "S(1,1,-1,0)", "S(0,-1,1,1)", "S(0,-1,-1,-1)", "S(-1,0,1,-1)", "S(-1,0,-1,1)"}, 96},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(0,1,-1,-1)", "S(0,-1,1,1)", "S(-1,1,0,1)", "S(-1,0,1,-1)", "S(-1,-1,-1,0)"}, 8},
      {{"S(1,1,1,0)", "S(1,0,-1,1)", "S(1,-1,0,-1)", "S(-1,1,0,1)", "S(-1,0,-1,-1)", "S(-1,-1,1,0)"}, 96},
  };
  return v;
}

}  // namespace hrap::golden
