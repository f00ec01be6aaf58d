#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hrap/linalg.hpp"

namespace hrap {

enum class Family { TypeI, TypeII, TypeIII, Other };

std::string_view family_name(Family f);            // "I", "II", "III", "Other"
Family family_from_name(std::string_view name);    // throws on unknown name

struct FacetNormal {
  Vec vector;  // unit space-like, length d+1
  std::string label;
  Family family = Family::Other;
  std::vector<Exact> a_projection;  // first d-1 coordinates of vector
};

FacetNormal make_facet(std::string label, Family family, Vec vector);

struct PolytopeSpec {
  int d = 5;
  std::vector<FacetNormal> facets;
};

// Unit space-like, consistent lengths, pairwise distinct vectors. Throws
// std::invalid_argument with the offending facet named.
void validate_polytope(const PolytopeSpec& p);

// The built-in 48-facet right-angled 5-polytope: 8 TypeI walls (+-1 in one of
// the first four slots, tail (1, 1)), 8 TypeII walls (tail (-1/2, 1/2)), and
// 32 TypeIII facets (three +-1 entries and one 0, tail (1/2, 3/2)), ordered
// axis-major for the walls and descending-lexicographic for TypeIII.
PolytopeSpec build_polytope_P();

enum class PositionKind { Intersecting, Parallel, Ultraparallel };

std::string_view position_name(PositionKind k);

struct MutualPosition {
  PositionKind kind;
  Exact inner;
  std::optional<Exact> cos_angle;  // -inner, only when Intersecting
};

// Exact trichotomy on |<f,g>| vs 1. Throws when the normals are identical.
MutualPosition mutual_position(const FacetNormal& f, const FacetNormal& g);

std::vector<std::vector<Exact>> gram_matrix(const PolytopeSpec& p);

struct RightAngledCheck {
  bool right_angled;
  // Offending pair when false: intersecting facets with nonzero inner.
  std::optional<std::pair<int, int>> counterexample;
  Exact counterexample_inner;
};

RightAngledCheck is_right_angled(const PolytopeSpec& p);

struct CoxeterPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<int, int>> commuting_pairs;  // i < j
};

// One generator per facet, one commuting relation per orthogonal
// intersection. Throws when the polytope is not right-angled.
CoxeterPresentation coxeter_presentation(const PolytopeSpec& p);

// Canonical JSON round trip:
// { "dimension": 5, "facets": [ { "label": "X+", "family": "I",
//   "vector": ["1","0","0","0","1","1"] }, ... ] }
std::string polytope_to_json_text(const PolytopeSpec& p);
PolytopeSpec polytope_from_json_text(std::string_view text);

}  // namespace hrap
