#include <doctest.h>

#include "fixtures.hpp"
#include "hrap/cubes.hpp"
#include "hrap/golden.hpp"

using hrap::CubeFace;
using hrap::CubeIncidence;

TEST_SUITE("cubes") {

TEST_CASE("face dimension counts free coordinates") {
  CHECK(CubeFace{{1, 0, 0, 0}}.dim() == 3);
  CHECK(CubeFace{{1, -1, 0, 0}}.dim() == 2);
  CHECK(CubeFace{{1, 1, -1, 0}}.dim() == 1);
  CHECK(CubeFace{{1, 1, 1, 1}}.dim() == 0);
}

TEST_CASE("phi sends walls to cubes and edge facets to edges") {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  for (const hrap::FacetNormal& f : p.facets) {
    const CubeFace c = hrap::phi(f);
    if (f.family == hrap::Family::TypeIII) {
      CHECK(c.dim() == 1);
    } else {
      CHECK(c.dim() == 3);
    }
    // The sign vector is the facet's own projection.
    for (size_t i = 0; i < 4; ++i)
      CHECK(hrap::Exact(c.sign[i]) == f.a_projection[i]);
  }
  CHECK_THROWS_AS(hrap::phi(hrap::fixtures::strip().facets[0]),
                  std::invalid_argument);
}

TEST_CASE("incidence classification on hand cases") {
  const CubeFace cube{{1, 0, 0, 0}};
  const CubeFace edge_in{{1, 1, 1, 0}};
  const CubeFace edge_out{{-1, 1, 1, 0}};
  const CubeFace edge_flip{{1, 1, -1, 0}};
  const CubeFace edge_far{{1, -1, -1, 0}};
  CHECK(hrap::incidence(edge_in, cube) == CubeIncidence::ContainedIn);
  CHECK(hrap::incidence(cube, edge_in) == CubeIncidence::ContainedIn);
  CHECK(hrap::incidence(cube, CubeFace{{-1, 0, 0, 0}}) ==
        CubeIncidence::Disjoint);
  // One sign flipped on the same support: opposite edges of a quadrilateral.
  CHECK(hrap::incidence(edge_in, edge_out) ==
        CubeIncidence::OppositeInQuadrilateral);
  CHECK(hrap::incidence(edge_in, edge_flip) ==
        CubeIncidence::OppositeInQuadrilateral);
  CHECK(hrap::incidence(edge_in, edge_far) == CubeIncidence::Other);
  // Two edges sharing exactly one cube vertex.
  CHECK(hrap::incidence(CubeFace{{1, 1, 0, 1}}, CubeFace{{1, 1, 1, 0}}) ==
        CubeIncidence::MeetAtVertex);
  // Two 3-cubes sharing a quadrilateral.
  CHECK(hrap::incidence(cube, CubeFace{{0, 1, 0, 0}}) ==
        CubeIncidence::Intersect);
}

TEST_CASE("position prediction agrees with exact arithmetic everywhere") {
  const hrap::CubeCorrespondence c =
      hrap::verify_cube_correspondence(hrap::build_polytope_P());
  CHECK(static_cast<long long>(c.pairs) == hrap::golden::kGramPairCount);
  CHECK(c.mismatches.empty());
}

TEST_CASE("prediction needs tagged families") {
  const hrap::PolytopeSpec s = hrap::fixtures::strip();
  CHECK_THROWS_AS(hrap::predict_position(s.facets[0], s.facets[1]),
                  std::invalid_argument);
}

}  // TEST_SUITE
