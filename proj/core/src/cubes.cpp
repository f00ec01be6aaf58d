#include "hrap/cubes.hpp"

#include <stdexcept>

namespace hrap {

int CubeFace::nonzeros() const {
  int k = 0;
  for (int s : sign) k += s != 0;
  return k;
}

CubeFace phi(const FacetNormal& f) {
  if (f.family == Family::Other)
    throw std::invalid_argument("phi: facet \"" + f.label +
                                "\" has no family tag");
  if (f.a_projection.size() != 4)
    throw std::invalid_argument("phi: facet \"" + f.label +
                                "\" is not 5-dimensional");
  CubeFace c;
  for (size_t i = 0; i < 4; ++i) {
    const Exact& x = f.a_projection[i];
    if (x == Exact(1))
      c.sign[i] = 1;
    else if (x == Exact(-1))
      c.sign[i] = -1;
    else if (x.is_zero())
      c.sign[i] = 0;
    else
      throw std::invalid_argument("phi: facet \"" + f.label +
                                  "\" has a non-sign a-projection");
  }
  const int expected = f.family == Family::TypeIII ? 3 : 1;
  if (c.nonzeros() != expected)
    throw std::invalid_argument("phi: facet \"" + f.label +
                                "\" does not map to a cube or edge");
  return c;
}

namespace {

// face(a) is a subset of face(b) iff b's constraints are among a's.
bool face_subset(const CubeFace& a, const CubeFace& b) {
  for (size_t i = 0; i < 4; ++i)
    if (b.sign[i] != 0 && a.sign[i] != b.sign[i]) return false;
  return true;
}

}  // namespace

CubeIncidence incidence(const CubeFace& a, const CubeFace& b) {
  if (face_subset(a, b) || face_subset(b, a)) return CubeIncidence::ContainedIn;

  const bool edges = a.dim() == 1 && b.dim() == 1;
  bool agree = true;
  int flips = 0, support_mismatch = 0;
  for (size_t i = 0; i < 4; ++i) {
    if (a.sign[i] != 0 && b.sign[i] != 0) {
      if (a.sign[i] != b.sign[i]) {
        agree = false;
        ++flips;
      }
    } else if (a.sign[i] != b.sign[i]) {
      ++support_mismatch;
    }
  }
  if (!agree) {
    if (edges && support_mismatch == 0 && flips == 1)
      return CubeIncidence::OppositeInQuadrilateral;
    return edges ? CubeIncidence::Other : CubeIncidence::Disjoint;
  }
  // Compatible constraints: the intersection is the face fixing the union of
  // supports; it is a single vertex exactly when the union is full.
  int united = 0;
  for (size_t i = 0; i < 4; ++i) united += a.sign[i] != 0 || b.sign[i] != 0;
  return united == 4 ? CubeIncidence::MeetAtVertex : CubeIncidence::Intersect;
}

PositionKind predict_position(const FacetNormal& f, const FacetNormal& g) {
  const FacetNormal* lo = &f;
  const FacetNormal* hi = &g;
  if (static_cast<int>(lo->family) > static_cast<int>(hi->family))
    std::swap(lo, hi);
  const CubeIncidence inc = incidence(phi(*lo), phi(*hi));

  const bool wall_pair = hi->family != Family::TypeIII;
  if (wall_pair && lo->family == hi->family) {
    // Two TypeI or two TypeII walls: adjacent cubes intersect, opposite
    // cubes are parallel walls.
    if (inc == CubeIncidence::Intersect) return PositionKind::Intersecting;
    if (inc == CubeIncidence::Disjoint) return PositionKind::Parallel;
    return PositionKind::Ultraparallel;
  }
  if (wall_pair) {
    // TypeI vs TypeII: same cube, adjacent cubes, opposite cubes.
    if (inc == CubeIncidence::ContainedIn) return PositionKind::Intersecting;
    if (inc == CubeIncidence::Intersect) return PositionKind::Parallel;
    return PositionKind::Ultraparallel;
  }
  if (lo->family != Family::TypeIII) {
    // Wall vs TypeIII: edge in cube, edge meeting the cube at a vertex,
    // edge disjoint from the cube.
    if (inc == CubeIncidence::ContainedIn) return PositionKind::Intersecting;
    if (inc == CubeIncidence::MeetAtVertex) return PositionKind::Parallel;
    return PositionKind::Ultraparallel;
  }
  // Two TypeIII facets: edges meeting at a vertex, opposite edges of a
  // quadrilateral, anything else.
  if (inc == CubeIncidence::MeetAtVertex) return PositionKind::Intersecting;
  if (inc == CubeIncidence::OppositeInQuadrilateral)
    return PositionKind::Parallel;
  return PositionKind::Ultraparallel;
}

CubeCorrespondence verify_cube_correspondence(const PolytopeSpec& p) {
  CubeCorrespondence out;
  const int n = static_cast<int>(p.facets.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++out.pairs;
      const PositionKind predicted =
          predict_position(p.facets[static_cast<size_t>(i)],
                           p.facets[static_cast<size_t>(j)]);
      const PositionKind actual =
          mutual_position(p.facets[static_cast<size_t>(i)],
                          p.facets[static_cast<size_t>(j)])
              .kind;
      if (predicted != actual) out.mismatches.push_back({i, j, predicted, actual});
    }
  return out;
}

}  // namespace hrap
