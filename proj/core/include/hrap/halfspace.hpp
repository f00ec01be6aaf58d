#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hrap/linalg.hpp"
#include "hrap/polytope.hpp"

namespace hrap {

// Point of the upper half-space model, or the point at infinity. The
// infinity case is a real variant, never a large-coordinate stand-in.
struct UpperPoint {
  bool at_infinity = false;
  std::vector<double> coords;

  static UpperPoint infinity() { return {true, {}}; }
};

// Central projection of the hyperboloid sheet onto the open unit ball:
// interior x maps to (x_1..x_d)/(1 + x_{d+1}), an ideal ray to y/y_{d+1}
// on the unit sphere. Space-like input is rejected.
std::vector<double> hyperboloid_to_ball(const Vec& x);
std::vector<double> hyperboloid_to_ball(const std::vector<double>& x);

// Ball to upper half-space: y maps to (2y_1,.., 2y_{d-1}, 1-|y|^2) scaled
// by 1/|y - e_d|^2; the pole e_d maps to infinity. Rejects |y| > 1 beyond
// a small tolerance.
UpperPoint ball_to_upper(const std::vector<double>& y);

// The composition of the two maps above, an isometry onto the upper
// half-space model.
UpperPoint hyperboloid_to_upper(const Vec& x);
UpperPoint hyperboloid_to_upper(const std::vector<double>& x);

// Exact image of a light-like ray on the boundary R^{d-1} of the upper
// half-space (converted to floats), or infinity for the pole ray.
UpperPoint ideal_boundary_point(const Vec& ray);

// Distance helpers for isometry checks: Lorentzian acosh form on the
// hyperboloid against the closed-form upper half-space distance
// cosh dist = 1 + |p-q|^2 / (2 p_h q_h), heights p_h, q_h.
double hyperboloid_distance(const std::vector<double>& x,
                            const std::vector<double>& y);
double upper_distance(const std::vector<double>& p,
                      const std::vector<double>& q);

// Boundary trace of a wall on R^{d-1}: an affine hyperplane when the wall
// passes through the pole ray (0,..,0,1,1), a Euclidean sphere otherwise.
// Coefficients are exact; the plane normal is automatically unit length.
struct PlaneWall {
  std::vector<Exact> normal;
  Exact offset;
};

struct SphereWall {
  std::vector<Exact> center;
  Exact radius;  // positive
};

using UpperHalfSpaceWall = std::variant<PlaneWall, SphereWall>;

UpperHalfSpaceWall wall_footprint(const FacetNormal& v);

std::vector<double> to_floats(const std::vector<Exact>& xs);

// Float deviation of a wall pair from exact tangency (tangent = true) or
// exact Euclidean orthogonality (tangent = false): sphere-sphere by center
// distance against radius sum/difference, sphere-plane by center-to-plane
// distance, plane-plane by normal alignment.
double footprint_pair_residual(const UpperHalfSpaceWall& a,
                               const UpperHalfSpaceWall& b, bool tangent);

// Catalog check for the built-in polytope: every wall facet of the first
// family lands on the coordinate hyperplane through its axis at offset 1,
// every other facet on the unit sphere centered at its integer projection.
struct FootprintEntry {
  std::string label;
  UpperHalfSpaceWall wall;
  bool matches_expected = false;
};

struct StandardConfigurationReport {
  std::vector<FootprintEntry> entries;
  long long plane_count = 0;
  long long sphere_count = 0;
  bool all_match = false;
  std::vector<std::string> mismatches;
};

StandardConfigurationReport verify_standard_configuration(
    const PolytopeSpec& p);

}  // namespace hrap
