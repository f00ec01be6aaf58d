#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hrap/golden.hpp"
#include "hrap/symmetry.hpp"

using hrap::FacetPermutation;
using hrap::PolytopeSpec;

TEST_SUITE("symmetry") {

TEST_CASE("permutation algebra") {
  const FacetPermutation a{{1, 2, 0}, 3};
  const FacetPermutation b{{0, 2, 1}, 2};
  // compose(a, b) applies b first.
  CHECK(hrap::compose(a, b).mapping == std::vector<int>{1, 0, 2});
  CHECK(hrap::compose(a, hrap::inverse_perm(a)).is_identity());
  CHECK(hrap::compose(hrap::inverse_perm(a), a).is_identity());
  CHECK(hrap::perm_order({1, 2, 0}) == 3);
  CHECK(hrap::perm_order({1, 0, 3, 2}) == 2);
  CHECK(hrap::perm_order({0, 1}) == 1);
  CHECK(hrap::perm_order({1, 2, 0, 4, 3}) == 6);  // lcm of cycle lengths
}

TEST_CASE("ideal triangle realizes the full permutation group") {
  const PolytopeSpec p = hrap::fixtures::ideal_triangle();
  const hrap::SymmetryGroup g = hrap::automorphisms(p);
  CHECK(g.order == 6);
  CHECK(g.elements.size() == 6);
  const auto parts = hrap::orbits(g, 3);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<int>{0, 1, 2});
  const hrap::Mat j = hrap::lorentz_form(p.d);
  for (const FacetPermutation& e : g.elements) {
    const hrap::Mat a = hrap::realize_matrix(e, p);
    CHECK(a * j * a.transpose() == j);
    for (size_t i = 0; i < p.facets.size(); ++i)
      CHECK(a.apply(p.facets[i].vector) ==
            p.facets[e.mapping[i]].vector);
  }
}

TEST_CASE("group closure and element orders divide the group order") {
  const hrap::SymmetryGroup g =
      hrap::automorphisms(hrap::fixtures::ideal_triangle());
  std::set<std::vector<int>> all;
  for (const FacetPermutation& e : g.elements) all.insert(e.mapping);
  for (const FacetPermutation& e : g.elements) {
    CHECK(g.order % e.order == 0);
    for (const FacetPermutation& f : g.elements)
      CHECK(all.count(hrap::compose(e, f).mapping) == 1);
  }
}

TEST_CASE("built-in group order and orbit split") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::SymmetryGroup g = hrap::automorphisms(p);
  CHECK(g.order == hrap::golden::kSymmetryOrder);
  CHECK(static_cast<long long>(g.elements.size()) == g.order);
  std::vector<long long> sizes;
  for (const auto& o : hrap::orbits(g, 48))
    sizes.push_back(static_cast<long long>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes.size() == hrap::golden::kFacetOrbitSizes.size());
  for (size_t i = 0; i < sizes.size(); ++i)
    CHECK(sizes[i] == hrap::golden::kFacetOrbitSizes[i]);
}

TEST_CASE("generators realize as exact isometries permuting the normals") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::SymmetryGroup g = hrap::automorphisms(p);
  const hrap::Mat j = hrap::lorentz_form(p.d);
  REQUIRE(!g.generators.empty());
  for (const FacetPermutation& e : g.generators) {
    const hrap::Mat a = hrap::realize_matrix(e, p);
    CHECK(a * j * a.transpose() == j);
  }
}

TEST_CASE("family action and cube action on the built-in polytope") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::SymmetryGroup g = hrap::automorphisms(p);
  const hrap::FamilyActionReport rep = hrap::family_action_report(g, p);
  CHECK(rep.ok());
  CHECK(rep.elements_checked == g.order);
  CHECK(rep.violations.empty());
  CHECK(rep.wall_swap_count > 0);

  const hrap::CubeActionSummary cube = hrap::phi_star_over(g, p);
  CHECK(static_cast<long long>(cube.kernel.size()) ==
        hrap::golden::kCubeActionKernelOrder);
  CHECK(cube.image_order == hrap::golden::kCubeActionImageOrder);
  for (const FacetPermutation& k : cube.kernel) {
    const std::vector<int> star = hrap::phi_star(k, p);
    for (size_t i = 0; i < star.size(); ++i)
      CHECK(star[i] == static_cast<int>(i));
  }
  // Identity acts trivially on the eight cubes.
  FacetPermutation id;
  for (int i = 0; i < 48; ++i) id.mapping.push_back(i);
  const std::vector<int> star = hrap::phi_star(id, p);
  REQUIRE(star.size() == 8);
  for (size_t i = 0; i < star.size(); ++i)
    CHECK(star[i] == static_cast<int>(i));
}

TEST_CASE("degenerate spans are rejected") {
  CHECK_THROWS_AS(hrap::automorphisms(hrap::fixtures::strip()),
                  std::invalid_argument);
}

}  // TEST_SUITE
