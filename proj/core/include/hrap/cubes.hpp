#pragma once

#include <array>
#include <vector>

#include "hrap/polytope.hpp"

namespace hrap {

// Face of the 4-cube boundary complex, addressed by a sign vector: the face
// consists of the cube vertices in {-1,+1}^4 agreeing with every nonzero
// entry. One nonzero entry = 3-dimensional cube, two = quadrilateral,
// three = edge, four = vertex.
struct CubeFace {
  std::array<int, 4> sign{};

  int nonzeros() const;
  int dim() const { return 4 - nonzeros(); }

  friend bool operator==(const CubeFace& a, const CubeFace& b) {
    return a.sign == b.sign;
  }
};

enum class CubeIncidence {
  ContainedIn,
  MeetAtVertex,
  Intersect,
  OppositeInQuadrilateral,
  Disjoint,
  Other,
};

// Walls (TypeI/TypeII) map to the cube of their a-projection, TypeIII facets
// to the edge of theirs. Throws for untagged facets or a-projections that are
// not valid cube/edge sign vectors.
CubeFace phi(const FacetNormal& f);

// Total classification of two faces by their vertex sets: containment either
// way, a single common vertex, a larger common face, or none. Edge pairs that
// share no vertex split into OppositeInQuadrilateral (same support, exactly
// one sign flip) and Other.
CubeIncidence incidence(const CubeFace& a, const CubeFace& b);

// The mutual position dictated by the families and phi-images alone, with no
// Lorentzian arithmetic. Throws on untagged facets.
PositionKind predict_position(const FacetNormal& f, const FacetNormal& g);

struct CubeCorrespondence {
  struct Mismatch {
    int i, j;
    PositionKind predicted;
    PositionKind actual;
  };
  int pairs = 0;
  std::vector<Mismatch> mismatches;
};

// predict_position vs mutual_position over all unordered pairs.
CubeCorrespondence verify_cube_correspondence(const PolytopeSpec& p);

}  // namespace hrap
