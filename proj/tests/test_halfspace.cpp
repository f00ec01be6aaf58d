#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hrap/golden.hpp"
#include "hrap/halfspace.hpp"

using hrap::Exact;
using hrap::PolytopeSpec;
using hrap::Rat;
using hrap::Vec;

TEST_SUITE("halfspace") {

TEST_CASE("ball projection anchors") {
  // Base point of the hyperboloid to the ball center.
  const std::vector<double> center = hrap::hyperboloid_to_ball(
      Vec{0, 0, 0, 0, 0, 1});
  for (double c : center) CHECK(c == doctest::Approx(0.0));
  // A light ray lands on the unit sphere.
  const std::vector<double> onb = hrap::hyperboloid_to_ball(
      Vec{0, 0, 0, 0, 1, 1});
  CHECK(onb[4] == doctest::Approx(1.0));
  CHECK_THROWS_AS(hrap::hyperboloid_to_ball(Vec{1, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("upper model anchors") {
  // Ball center lifts to height one above the origin.
  const hrap::UpperPoint base = hrap::ball_to_upper({0, 0, 0, 0, 0});
  REQUIRE(!base.at_infinity);
  REQUIRE(base.coords.size() == 5);
  for (size_t i = 0; i < 4; ++i) CHECK(base.coords[i] == doctest::Approx(0));
  CHECK(base.coords[4] == doctest::Approx(1.0));
  // The pole of the ball is the point at infinity.
  CHECK(hrap::ball_to_upper({0, 0, 0, 0, 1}).at_infinity);
  CHECK_THROWS_AS(hrap::ball_to_upper({0, 0, 0, 0, 1.1}),
                  std::invalid_argument);
}

TEST_CASE("ideal boundary points") {
  CHECK(hrap::ideal_boundary_point(Vec{0, 0, 0, 0, 1, 1}).at_infinity);
  const hrap::UpperPoint corner =
      hrap::ideal_boundary_point(Vec{2, 2, 2, 2, 3, 5});
  REQUIRE(!corner.at_infinity);
  REQUIRE(corner.coords.size() == 4);
  for (double c : corner.coords) CHECK(c == doctest::Approx(1.0));
}

TEST_CASE("footprint anchors match the catalog verbatim") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const auto find = [&](const std::string& label) -> const hrap::FacetNormal& {
    for (const hrap::FacetNormal& f : p.facets)
      if (f.label == label) return f;
    REQUIRE(false);
    return p.facets[0];
  };
  // The x = -1 coordinate plane.
  const auto xm = hrap::wall_footprint(find("X-"));
  const hrap::PlaneWall* plane = std::get_if<hrap::PlaneWall>(&xm);
  REQUIRE(plane != nullptr);
  CHECK(plane->normal == std::vector<Exact>{-1, 0, 0, 0});
  CHECK(plane->offset == Exact(1));
  // The unit sphere centered at (-1, 0, 0, 0).
  const auto sxm = hrap::wall_footprint(find("S_X-"));
  const hrap::SphereWall* sphere = std::get_if<hrap::SphereWall>(&sxm);
  REQUIRE(sphere != nullptr);
  CHECK(sphere->center == std::vector<Exact>{-1, 0, 0, 0});
  CHECK(sphere->radius == Exact(1));
  // The unit sphere centered at (1, 1, 1, 0).
  const auto s3 = hrap::wall_footprint(find("S(1,1,1,0)"));
  const hrap::SphereWall* edge = std::get_if<hrap::SphereWall>(&s3);
  REQUIRE(edge != nullptr);
  CHECK(edge->center == std::vector<Exact>{1, 1, 1, 0});
  CHECK(edge->radius == Exact(1));
}

TEST_CASE("standard configuration report") {
  const hrap::StandardConfigurationReport rep =
      hrap::verify_standard_configuration(hrap::build_polytope_P());
  CHECK(rep.all_match);
  CHECK(rep.mismatches.empty());
  CHECK(rep.plane_count == hrap::golden::kFootprintPlaneCount);
  CHECK(rep.sphere_count == hrap::golden::kFootprintSphereCount);
  REQUIRE(static_cast<int>(rep.entries.size()) == hrap::golden::kFacetCount);
  for (const hrap::FootprintEntry& e : rep.entries) CHECK(e.matches_expected);
}

TEST_CASE("wall footprint rejects non-unit input") {
  CHECK_THROWS_AS(
      hrap::wall_footprint(
          {Vec{2, 0, 0, 0, 0, 0}, "bad", hrap::Family::Other, {}}),
      std::invalid_argument);
}

TEST_CASE("pair residuals vanish for the built-in catalog") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::StandardConfigurationReport rep =
      hrap::verify_standard_configuration(p);
  double worst = 0;
  for (size_t i = 0; i < p.facets.size(); ++i)
    for (size_t j = i + 1; j < p.facets.size(); ++j) {
      const hrap::MutualPosition pos =
          hrap::mutual_position(p.facets[i], p.facets[j]);
      if (pos.kind == hrap::PositionKind::Ultraparallel) continue;
      const bool tangent = pos.kind == hrap::PositionKind::Parallel;
      worst = std::max(worst,
                       hrap::footprint_pair_residual(
                           rep.entries[i].wall, rep.entries[j].wall, tangent));
    }
  CHECK(worst < 1e-9);
}

TEST_CASE("model change preserves distances") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const auto sample = [&] {
    std::vector<double> x(6);
    double n2 = 0;
    for (int i = 0; i < 5; ++i) {
      x[static_cast<size_t>(i)] = coord(rng);
      n2 += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    }
    x[5] = std::sqrt(1.0 + n2);
    return x;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> x = sample(), y = sample();
    const hrap::UpperPoint px = hrap::hyperboloid_to_upper(x);
    const hrap::UpperPoint py = hrap::hyperboloid_to_upper(y);
    REQUIRE(!px.at_infinity);
    REQUIRE(!py.at_infinity);
    const double want = hrap::hyperboloid_distance(x, y);
    const double got = hrap::upper_distance(px.coords, py.coords);
    CHECK(std::abs(want - got) < 1e-10);
  }
}

}  // TEST_SUITE
