#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "hrap/golden.hpp"
#include "hrap/polytope.hpp"

using hrap::Exact;
using hrap::Family;
using hrap::PolytopeSpec;

TEST_SUITE("polytope") {

TEST_CASE("built-in polytope has the advertised facet inventory") {
  const PolytopeSpec p = hrap::build_polytope_P();
  CHECK_NOTHROW(hrap::validate_polytope(p));
  REQUIRE(static_cast<int>(p.facets.size()) == hrap::golden::kFacetCount);
  std::map<Family, int> by_family;
  std::set<std::string> labels;
  for (const hrap::FacetNormal& f : p.facets) {
    ++by_family[f.family];
    labels.insert(f.label);
    CHECK(hrap::lorentz_inner(f.vector, f.vector) == Exact(1));
    REQUIRE(f.a_projection.size() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(f.a_projection[i] == f.vector[i]);
  }
  CHECK(by_family[Family::TypeI] == 8);
  CHECK(by_family[Family::TypeII] == 8);
  CHECK(by_family[Family::TypeIII] == 32);
  CHECK(labels.size() == p.facets.size());
}

TEST_CASE("per-facet position profile is family-determined") {
  const PolytopeSpec p = hrap::build_polytope_P();
  for (size_t i = 0; i < p.facets.size(); ++i) {
    int counts[3] = {0, 0, 0};
    for (size_t j = 0; j < p.facets.size(); ++j) {
      if (i == j) continue;
      ++counts[static_cast<int>(
          hrap::mutual_position(p.facets[i], p.facets[j]).kind)];
    }
    const bool wall = p.facets[i].family != Family::TypeIII;
    const auto& want = wall ? hrap::golden::kWallPositionCounts
                            : hrap::golden::kEdgePositionCounts;
    CHECK(counts[0] == want[0]);
    CHECK(counts[1] == want[1]);
    CHECK(counts[2] == want[2]);
  }
}

TEST_CASE("gram histogram is frozen") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const auto g = hrap::gram_matrix(p);
  std::map<Exact, long long> hist;
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i][i] == Exact(1));
    for (size_t j = i + 1; j < g.size(); ++j) ++hist[g[i][j]];
  }
  REQUIRE(hist.size() == hrap::golden::kGramHistogram.size());
  for (const auto& [value, count] : hrap::golden::kGramHistogram)
    CHECK(hist[Exact(value)] == count);
}

TEST_CASE("mutual position anchors") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const auto find = [&](const std::string& label) -> const hrap::FacetNormal& {
    for (const hrap::FacetNormal& f : p.facets)
      if (f.label == label) return f;
    REQUIRE(false);
    return p.facets[0];
  };
  const auto xp_xm = hrap::mutual_position(find("X+"), find("X-"));
  CHECK(xp_xm.kind == hrap::PositionKind::Parallel);
  CHECK(xp_xm.inner == Exact(-1));
  const auto xp_yp = hrap::mutual_position(find("X+"), find("Y+"));
  CHECK(xp_yp.kind == hrap::PositionKind::Intersecting);
  CHECK(xp_yp.inner.is_zero());
  REQUIRE(xp_yp.cos_angle.has_value());
  CHECK(xp_yp.cos_angle->is_zero());
  CHECK_THROWS_AS(hrap::mutual_position(find("X+"), find("X+")),
                  std::invalid_argument);
}

TEST_CASE("right-angledness holds for the built-in and fails when tilted") {
  CHECK(hrap::is_right_angled(hrap::build_polytope_P()).right_angled);
  const hrap::RightAngledCheck bad =
      hrap::is_right_angled(hrap::fixtures::skewed_wall());
  REQUIRE(!bad.right_angled);
  REQUIRE(bad.counterexample.has_value());
  CHECK((bad.counterexample->first == 0 || bad.counterexample->second == 0));
  CHECK(!bad.counterexample_inner.is_zero());
}

TEST_CASE("presentation counts generators and commuting relations") {
  const hrap::CoxeterPresentation pres =
      hrap::coxeter_presentation(hrap::build_polytope_P());
  CHECK(static_cast<int>(pres.generators.size()) ==
        hrap::golden::kFacetCount);
  CHECK(static_cast<long long>(pres.commuting_pairs.size()) ==
        hrap::golden::kCommutingPairCount);
  for (const auto& [a, b] : pres.commuting_pairs) CHECK(a < b);
  CHECK_THROWS_AS(hrap::coxeter_presentation(hrap::fixtures::skewed_wall()),
                  std::invalid_argument);
}

TEST_CASE("json round trip is exact") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const std::string text = hrap::polytope_to_json_text(p);
  const PolytopeSpec q = hrap::polytope_from_json_text(text);
  REQUIRE(q.facets.size() == p.facets.size());
  CHECK(q.d == p.d);
  for (size_t i = 0; i < p.facets.size(); ++i) {
    CHECK(q.facets[i].label == p.facets[i].label);
    CHECK(q.facets[i].family == p.facets[i].family);
    CHECK(q.facets[i].vector == p.facets[i].vector);
    CHECK(q.facets[i].a_projection == p.facets[i].a_projection);
  }
  CHECK(hrap::polytope_to_json_text(q) == text);
  CHECK_THROWS(hrap::polytope_from_json_text("{ not json"));
  CHECK_THROWS(hrap::polytope_from_json_text("{\"dimension\": 5}"));
}

TEST_CASE("validation rejects non-unit and duplicate normals") {
  PolytopeSpec p = hrap::fixtures::strip();
  p.facets[0].vector = {2, 0, 0};  // norm 4
  CHECK_THROWS_AS(hrap::validate_polytope(p), std::invalid_argument);
  PolytopeSpec q = hrap::fixtures::strip();
  q.facets[1] = hrap::make_facet("dup", Family::Other, q.facets[0].vector);
  CHECK_THROWS_AS(hrap::validate_polytope(q), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII,
                   Family::Other})
    CHECK(hrap::family_from_name(hrap::family_name(f)) == f);
  CHECK_THROWS_AS(hrap::family_from_name("IV"), std::invalid_argument);
}

}  // TEST_SUITE
