#pragma once

#include <string>
#include <vector>

#include "hrap/polytope.hpp"
#include "hrap/symmetry.hpp"

namespace hrap {

// Strict counts only ultraparallel pairs as disjoint; Weak also admits
// parallel pairs, which share a single ideal point.
enum class DisjointMode { Strict, Weak };

const char* disjoint_mode_name(DisjointMode mode);
DisjointMode disjoint_mode_from_name(const std::string& name);

struct FacetSelection {
  std::vector<int> removed;  // sorted facet indices
  DisjointMode mode = DisjointMode::Strict;
};

// True when every pair in the selection meets its mode's condition.
bool selection_valid(const PolytopeSpec& p, const FacetSelection& f);

// Symmetric adjacency matrix: true where the pair counts as disjoint.
std::vector<std::vector<bool>> disjointness_graph(const PolytopeSpec& p,
                                                  DisjointMode mode);

// All inclusion-maximal pairwise-disjoint facet sets, each sorted, the list
// in lexicographic order. Pivoting clique enumeration on the graph above.
std::vector<FacetSelection> maximal_disjoint_sets(const PolytopeSpec& p,
                                                  DisjointMode mode);

struct CensusOrbit {
  std::vector<int> representative;  // lexicographically least member
  long long size = 0;
};

// The maximal sets grouped into symmetry orbits.
struct Census {
  DisjointMode mode = DisjointMode::Strict;
  long long set_count = 0;
  std::vector<CensusOrbit> orbits;  // ordered by representative
};

Census classify_census(const PolytopeSpec& p, DisjointMode mode,
                       const SymmetryGroup& g);

// Reflection presentation of the group generated by the facets outside the
// selection: generators are the remaining facet labels in index order, and
// commuting_pairs index into that generator list. boundary lists the removed
// facets' labels.
struct EndsPresentation {
  CoxeterPresentation presentation;
  std::vector<std::string> boundary;
};

EndsPresentation ends_presentation(const PolytopeSpec& p,
                                   const FacetSelection& f);

// One target facet of the determination audit. The unknown is the facet's
// unit normal; each anchored neighbor contributes one linear condition on
// it (inner product 0 for orthogonal anchors, the tangency value for
// parallel anchors when those are needed). Rank d pins the normal up to
// the isolated intersections of a line with the unit quadric.
struct DeterminationRecord {
  int facet = -1;
  std::vector<int> fixed_neighbors_used;
  int constraint_rank = 0;
  bool locally_determined = false;
  bool used_tangency = false;
};

struct DeterminationReport {
  FacetSelection selection;
  // The audit accepts selections that violate their mode so callers can
  // probe anchor configurations; this flag records the violation.
  bool selection_pairwise_disjoint = false;
  std::vector<DeterminationRecord> records;  // wall targets first
  bool all_determined = false;
};

// Anchors the wall facets outside the selection as one fixed block, then
// asks, for every facet outside the selection, whether its orthogonality
// and (only when orthogonality leaves rank below d, and flagged) tangency
// relations to the anchored walls pin its normal. Failures are data in the
// report, not errors.
DeterminationReport determination_audit(const PolytopeSpec& p,
                                        const FacetSelection& f);

}  // namespace hrap
