#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "fixtures.hpp"
#include "hrap/ends.hpp"
#include "hrap/golden.hpp"

using hrap::DisjointMode;
using hrap::FacetSelection;
using hrap::PolytopeSpec;

TEST_SUITE("ends") {

TEST_CASE("mode names round trip") {
  CHECK(hrap::disjoint_mode_from_name("strict") == DisjointMode::Strict);
  CHECK(hrap::disjoint_mode_from_name("weak") == DisjointMode::Weak);
  CHECK(std::string(hrap::disjoint_mode_name(DisjointMode::Strict)) ==
        "strict");
  CHECK(std::string(hrap::disjoint_mode_name(DisjointMode::Weak)) == "weak");
  CHECK_THROWS_AS(hrap::disjoint_mode_from_name("loose"),
                  std::invalid_argument);
}

TEST_CASE("triangle: tangent lines are weakly but not strictly disjoint") {
  const PolytopeSpec p = hrap::fixtures::ideal_triangle();
  CHECK(!hrap::selection_valid(p, {{0, 1}, DisjointMode::Strict}));
  CHECK(hrap::selection_valid(p, {{0, 1}, DisjointMode::Weak}));

  const auto strict_sets =
      hrap::maximal_disjoint_sets(p, DisjointMode::Strict);
  REQUIRE(strict_sets.size() == 3);  // three isolated singletons
  for (const FacetSelection& f : strict_sets)
    CHECK(f.removed.size() == 1);

  const auto weak_sets = hrap::maximal_disjoint_sets(p, DisjointMode::Weak);
  REQUIRE(weak_sets.size() == 1);
  CHECK(weak_sets[0].removed == std::vector<int>{0, 1, 2});

  const hrap::Census census = hrap::classify_census(
      p, DisjointMode::Strict, hrap::automorphisms(p));
  CHECK(census.set_count == 3);
  REQUIRE(census.orbits.size() == 1);
  CHECK(census.orbits[0].representative == std::vector<int>{0});
  CHECK(census.orbits[0].size == 3);
}

TEST_CASE("presentation of the complement of a selection") {
  const PolytopeSpec p = hrap::fixtures::ideal_triangle();
  const hrap::EndsPresentation ep =
      hrap::ends_presentation(p, {{0}, DisjointMode::Strict});
  CHECK(ep.boundary == std::vector<std::string>{"t1"});
  CHECK(ep.presentation.generators == std::vector<std::string>{"t2", "t3"});
  CHECK(ep.presentation.commuting_pairs.empty());  // tangent, not orthogonal
  CHECK_THROWS_AS(
      hrap::ends_presentation(p, {{0, 1}, DisjointMode::Strict}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hrap::ends_presentation(p, {{0, 7}, DisjointMode::Strict}),
      std::invalid_argument);
}

TEST_CASE("built-in strict census matches the frozen orbit table") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::SymmetryGroup g = hrap::automorphisms(p);
  const hrap::Census census =
      hrap::classify_census(p, DisjointMode::Strict, g);
  CHECK(census.set_count == hrap::golden::kStrictMaximalSetCount);
  REQUIRE(static_cast<long long>(census.orbits.size()) ==
          hrap::golden::kStrictOrbitCount);
  long long total = 0;
  for (const auto& o : census.orbits) total += o.size;
  CHECK(total == census.set_count);

  const auto& frozen = hrap::golden::strict_census_orbits();
  REQUIRE(frozen.size() == census.orbits.size());
  for (size_t k = 0; k < frozen.size(); ++k) {
    std::vector<std::string> labels;
    for (int i : census.orbits[k].representative)
      labels.push_back(p.facets[static_cast<size_t>(i)].label);
    CHECK(labels == frozen[k].first);
    CHECK(census.orbits[k].size == frozen[k].second);
  }
}

TEST_CASE("built-in weak census sizes") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::Census census = hrap::classify_census(
      p, DisjointMode::Weak, hrap::automorphisms(p));
  CHECK(census.set_count == hrap::golden::kWeakMaximalSetCount);
  CHECK(static_cast<long long>(census.orbits.size()) ==
        hrap::golden::kWeakOrbitCount);
}

TEST_CASE("maximal set size histogram, strict mode") {
  const PolytopeSpec p = hrap::build_polytope_P();
  std::map<int, long long> hist;
  for (const FacetSelection& f :
       hrap::maximal_disjoint_sets(p, DisjointMode::Strict))
    ++hist[static_cast<int>(f.removed.size())];
  REQUIRE(hist.size() == hrap::golden::kStrictSizeHistogram.size());
  for (const auto& [size, count] : hrap::golden::kStrictSizeHistogram)
    CHECK(hist[size] == count);
}

TEST_CASE("audit with nothing removed determines every facet") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::DeterminationReport rep =
      hrap::determination_audit(p, {{}, DisjointMode::Strict});
  CHECK(rep.selection_pairwise_disjoint);
  CHECK(rep.all_determined);
  REQUIRE(rep.records.size() == 48);
  for (const hrap::DeterminationRecord& r : rep.records) {
    CHECK(r.locally_determined);
    CHECK(r.constraint_rank >= p.d);
    bool rank_known = false;
    for (int rank : hrap::golden::kAuditRanksSeen)
      if (r.constraint_rank == rank) rank_known = true;
    CHECK(rank_known);
  }
}

TEST_CASE("audit flags a selection violating its mode but still runs") {
  const PolytopeSpec p = hrap::build_polytope_P();
  FacetSelection f;
  f.mode = DisjointMode::Strict;
  f.removed = {0, 1};  // an opposite wall pair, parallel so not strict
  const hrap::DeterminationReport rep = hrap::determination_audit(p, f);
  CHECK(!rep.selection_pairwise_disjoint);
  CHECK(rep.all_determined);
  CHECK(rep.records.size() == 46);

  f.mode = DisjointMode::Weak;
  const hrap::DeterminationReport weak = hrap::determination_audit(p, f);
  CHECK(weak.selection_pairwise_disjoint);
  CHECK(weak.all_determined);
}

TEST_CASE("tangency rows appear exactly where orthogonality is short") {
  const PolytopeSpec p = hrap::build_polytope_P();
  const hrap::DeterminationReport rep =
      hrap::determination_audit(p, {{}, DisjointMode::Strict});
  for (const hrap::DeterminationRecord& r : rep.records) {
    if (p.facets[static_cast<size_t>(r.facet)].family ==
        hrap::Family::TypeIII) {
      // Only 6 walls are orthogonal to an edge facet and they span rank 4,
      // so the 4 tangent walls must contribute; together they reach rank 6.
      CHECK(r.used_tangency);
      CHECK(r.constraint_rank == 6);
    } else {
      // A wall target sees rank 5 from orthogonality alone.
      CHECK(!r.used_tangency);
      CHECK(r.constraint_rank == 5);
    }
  }
}

}  // TEST_SUITE
