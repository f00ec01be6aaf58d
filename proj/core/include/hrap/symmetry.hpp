#pragma once

#include <string>
#include <vector>

#include "hrap/cubes.hpp"
#include "hrap/linalg.hpp"
#include "hrap/polytope.hpp"

namespace hrap {

// A symmetry of the polytope in permutation form: facet i maps to mapping[i].
// Valid permutations preserve the Gram matrix entrywise, which pins down a
// unique Lorentz isometry once the normals span the ambient space.
struct FacetPermutation {
  std::vector<int> mapping;
  int order = 1;

  bool is_identity() const;
  bool operator==(const FacetPermutation& o) const {
    return mapping == o.mapping;
  }
};

FacetPermutation compose(const FacetPermutation& a, const FacetPermutation& b);
FacetPermutation inverse_perm(const FacetPermutation& a);
int perm_order(const std::vector<int>& mapping);

struct SymmetryGroup {
  std::vector<FacetPermutation> generators;
  long long order = 0;
  std::vector<FacetPermutation> elements;  // full list, sorted by mapping
};

// Backtracking search over the Gram-weighted complete graph. Returns every
// permutation preserving the exact Gram matrix, in lexicographic order.
// Requires the normals to span the (d+1)-space.
SymmetryGroup automorphisms(const PolytopeSpec& p);

// The unique matrix A with A v_i = v_{sigma(i)} for all facets. Also checks
// A J A^T = J exactly, J the bilinear form, so A is a genuine isometry.
Mat realize_matrix(const FacetPermutation& sigma, const PolytopeSpec& p);

// How the group acts on the two facet families. Every element must keep
// wall facets (one nonzero entry in a) and edge facets (three nonzeros)
// separate, and an element sending one TypeI facet into TypeII must swap
// those two families wholesale.
struct FamilyActionReport {
  long long elements_checked = 0;
  long long wall_swap_count = 0;  // elements exchanging TypeI and TypeII
  bool walls_closed = false;      // TypeI + TypeII preserved setwise
  bool edges_closed = false;      // TypeIII preserved setwise
  bool swaps_wholesale = false;
  std::vector<std::string> violations;

  bool ok() const { return walls_closed && edges_closed && swaps_wholesale; }
};

FamilyActionReport family_action_report(const SymmetryGroup& g,
                                        const PolytopeSpec& p);

// Induced permutation of the eight cube facets of the four-cube. Both wall
// preimages of each cube must land on wall facets over a common cube, else
// the permutation is not family-coherent and the call throws.
std::vector<int> phi_star(const FacetPermutation& sigma,
                          const PolytopeSpec& p);

struct CubeActionSummary {
  std::vector<FacetPermutation> kernel;  // elements fixing all eight cubes
  long long image_order = 0;             // distinct induced permutations
};

CubeActionSummary phi_star_over(const SymmetryGroup& g,
                                const PolytopeSpec& p);

// Orbit partition of {0..n-1} under the group, each orbit sorted, orbits
// ordered by least member.
std::vector<std::vector<int>> orbits(const SymmetryGroup& g, int facet_count);

}  // namespace hrap
