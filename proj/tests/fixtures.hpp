#pragma once

#include "hrap/polytope.hpp"

// Small hand-checked polytopes for exercising the library away from the
// built-in 48-facet object. All normals are exactly unit space-like.
namespace hrap::fixtures {

// Right-angled hyperbolic pentagon in the (2,1) form. The orthogonal pairs
// form a 5-cycle 1-2-3-4-5-1 and every other pair is ultraparallel, so the
// polygon has five finite vertices.
inline PolytopeSpec pentagon() {
  PolytopeSpec p;
  p.d = 2;
  const Exact r2 = Exact::sqrt2();
  p.facets.push_back(make_facet("p1", Family::Other, {-1, 0, 0}));
  p.facets.push_back(make_facet("p2", Family::Other, {0, -1, 0}));
  p.facets.push_back(
      make_facet("p3", Family::Other, {17, 0, Exact(12) * r2}));
  p.facets.push_back(make_facet(
      "p4", Family::Other,
      {Exact(Rat(13, 7)) * r2, Exact(Rat(85, 84)), Exact(Rat(221, 84))}));
  p.facets.push_back(make_facet(
      "p5", Family::Other, {0, Exact(Rat(13, 12)), Exact(Rat(5, 12))}));
  return p;
}

// Three pairwise tangent lines: an ideal triangle, three ideal vertices.
inline PolytopeSpec ideal_triangle() {
  PolytopeSpec p;
  p.d = 2;
  p.facets.push_back(make_facet("t1", Family::Other, {0, -1, 0}));
  p.facets.push_back(make_facet("t2", Family::Other, {1, 1, 1}));
  p.facets.push_back(make_facet("t3", Family::Other, {-1, 1, 1}));
  return p;
}

// Two ultraparallel lines bounding an infinite-area strip: no vertices.
inline PolytopeSpec strip() {
  PolytopeSpec p;
  p.d = 2;
  p.facets.push_back(make_facet("s1", Family::Other, {1, 0, 0}));
  p.facets.push_back(make_facet("s2", Family::Other, {-2, 1, 2}));
  return p;
}

// The built-in polytope with the first wall normal tilted in the x-y plane.
// Still unit space-like, but it now meets its y-axis neighbor at a
// non-right angle, so right-angledness fails.
inline PolytopeSpec skewed_wall() {
  PolytopeSpec p = build_polytope_P();
  const std::string label = p.facets[0].label;
  const Family fam = p.facets[0].family;
  p.facets[0] = make_facet(
      label, fam,
      {Exact(Rat(3, 5)), Exact(Rat(4, 5)), 0, 0, 1, 1});
  return p;
}

}  // namespace hrap::fixtures
