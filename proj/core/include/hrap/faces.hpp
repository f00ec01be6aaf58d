#pragma once

#include <string>
#include <vector>

#include "hrap/polytope.hpp"

namespace hrap {

struct VertexRay {
  enum class Kind { Finite, Ideal };

  // Primitive exact direction (coprime integer rational and root-2 parts,
  // positive last coordinate); the canonical dedup key.
  Vec direction;
  Kind kind;
  std::vector<int> incident_facets;  // sorted, every facet through the ray
};

// Exact vertex enumeration over d-subsets of facets. Subsets containing an
// ultraparallel pair are pruned: such a pair spans an indefinite 2-plane
// whose Lorentz complement is positive definite, so the subset kernel cannot
// hold a time- or light-like ray. threads <= 0 picks the hardware count.
// Requires a right-angled polytope.
std::vector<VertexRay> enumerate_vertices(const PolytopeSpec& p,
                                          int threads = 0);

// Number of facets intersecting the given one; in a right-angled polytope
// each orthogonal intersection is a ridge.
int ridge_count(const PolytopeSpec& p, int facet_index);

struct VolumeCertificate {
  bool finite_volume = false;
  // Every (d-1)-subset of pairwise-orthogonal facets arising inside some
  // vertex's incident set lies in exactly two vertices.
  bool method_ray_oracle = false;
  // Right-angled subdiagram criterion, no ray data: at least one
  // (d-1)-clique of the orthogonality graph exists, and each one extends to
  // exactly two subdiagrams that are a d-clique (finite vertex) or d-1
  // cross-orthogonal parallel pairs (ideal vertex).
  bool method_combinatorial = false;
  int ideal_vertex_count = 0;
  int finite_vertex_count = 0;
  std::vector<std::string> failures;
};

// Both methods evaluated; they must agree or the call throws. Requires a
// right-angled polytope.
VolumeCertificate finite_volume_certificate(const PolytopeSpec& p,
                                            int threads = 0);

// Counts of k-faces, k = 0..d-1: closure of the vertex incident sets under
// intersection, graded by d - rank. Throws on infinite-volume input.
std::vector<long long> f_vector(const PolytopeSpec& p, int threads = 0);

// Incident set of size 2(d-1) splitting into d-1 parallel pairs that are
// orthogonal across pairs: the Euclidean-box link every ideal vertex of a
// right-angled finite-volume polytope must have.
bool ideal_vertex_box_link(const PolytopeSpec& p, const VertexRay& v);

}  // namespace hrap
