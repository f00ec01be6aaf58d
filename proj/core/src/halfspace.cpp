#include "hrap/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hrap {

namespace {

constexpr double kBallTol = 1e-9;

double sq_norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

std::vector<double> hyperboloid_to_ball(const Vec& x) {
  const VectorClass cls = classify_vector(x);
  if (cls == VectorClass::SpaceLike)
    throw std::invalid_argument(
        "hyperboloid_to_ball: space-like input has no image");
  if (x.back().sign() <= 0)
    throw std::invalid_argument(
        "hyperboloid_to_ball: input must have positive last coordinate");
  std::vector<double> f;
  f.reserve(x.size());
  for (const Exact& c : x) f.push_back(c.to_double());
  if (cls == VectorClass::LightLike) {
    std::vector<double> out(f.begin(), f.end() - 1);
    for (double& c : out) c /= f.back();
    return out;
  }
  // Scale a time-like ray onto the unit hyperboloid first.
  const double q = -lorentz_inner(x, x).to_double();
  const double s = 1.0 / std::sqrt(q);
  std::vector<double> out(f.begin(), f.end() - 1);
  for (double& c : out) c = c * s / (1.0 + f.back() * s);
  return out;
}

std::vector<double> hyperboloid_to_ball(const std::vector<double>& x) {
  if (x.size() < 2)
    throw std::invalid_argument("hyperboloid_to_ball: vector too short");
  double q = -x.back() * x.back();
  for (size_t i = 0; i + 1 < x.size(); ++i) q += x[i] * x[i];
  if (q > kBallTol)
    throw std::invalid_argument(
        "hyperboloid_to_ball: space-like input has no image");
  if (x.back() <= 0)
    throw std::invalid_argument(
        "hyperboloid_to_ball: input must have positive last coordinate");
  std::vector<double> out(x.begin(), x.end() - 1);
  if (q > -kBallTol) {
    for (double& c : out) c /= x.back();
    return out;
  }
  const double s = 1.0 / std::sqrt(-q);
  for (double& c : out) c = c * s / (1.0 + x.back() * s);
  return out;
}

UpperPoint ball_to_upper(const std::vector<double>& y) {
  const size_t d = y.size();
  if (d < 2) throw std::invalid_argument("ball_to_upper: vector too short");
  const double n2 = sq_norm(y);
  if (n2 > 1.0 + kBallTol)
    throw std::invalid_argument("ball_to_upper: point outside the unit ball");
  double denom = n2 - 2.0 * y.back() + 1.0;  // |y - e_d|^2
  if (denom < kBallTol * kBallTol) return UpperPoint::infinity();
  UpperPoint out;
  out.coords.resize(d);
  for (size_t i = 0; i + 1 < d; ++i) out.coords[i] = 2.0 * y[i] / denom;
  out.coords[d - 1] = (1.0 - n2) / denom;
  return out;
}

UpperPoint hyperboloid_to_upper(const Vec& x) {
  return ball_to_upper(hyperboloid_to_ball(x));
}

UpperPoint hyperboloid_to_upper(const std::vector<double>& x) {
  return ball_to_upper(hyperboloid_to_ball(x));
}

UpperPoint ideal_boundary_point(const Vec& ray) {
  if (classify_vector(ray) != VectorClass::LightLike)
    throw std::invalid_argument("ideal_boundary_point: ray must be light-like");
  const size_t d1 = ray.size();  // d + 1
  const Exact denom = ray[d1 - 1] - ray[d1 - 2];
  if (denom.is_zero()) return UpperPoint::infinity();
  UpperPoint out;
  out.coords.reserve(d1 - 2);
  for (size_t i = 0; i + 2 < d1; ++i)
    out.coords.push_back((ray[i] / denom).to_double());
  return out;
}

double hyperboloid_distance(const std::vector<double>& x,
                            const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("hyperboloid_distance: size mismatch");
  auto unit = [](const std::vector<double>& v) {
    double q = -v.back() * v.back();
    for (size_t i = 0; i + 1 < v.size(); ++i) q += v[i] * v[i];
    if (q >= 0)
      throw std::invalid_argument(
          "hyperboloid_distance: input is not time-like");
    std::vector<double> u = v;
    const double s = 1.0 / std::sqrt(-q);
    for (double& c : u) c *= s;
    return u;
  };
  const std::vector<double> a = unit(x), b = unit(y);
  double inner = -a.back() * b.back();
  for (size_t i = 0; i + 1 < a.size(); ++i) inner += a[i] * b[i];
  // Rounding can push the product slightly above -1 for nearby points.
  return std::acosh(std::max(1.0, -inner));
}

double upper_distance(const std::vector<double>& p,
                      const std::vector<double>& q) {
  if (p.size() != q.size() || p.empty())
    throw std::invalid_argument("upper_distance: size mismatch");
  if (p.back() <= 0 || q.back() <= 0)
    throw std::invalid_argument("upper_distance: points must have positive height");
  double diff2 = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    const double t = p[i] - q[i];
    diff2 += t * t;
  }
  return std::acosh(1.0 + diff2 / (2.0 * p.back() * q.back()));
}

UpperHalfSpaceWall wall_footprint(const FacetNormal& v) {
  const size_t d1 = v.vector.size();
  if (d1 < 3)
    throw std::invalid_argument("wall_footprint: vector too short");
  if (!((lorentz_inner(v.vector, v.vector) - Exact(1)).is_zero()))
    throw std::invalid_argument("wall_footprint: normal of facet \"" +
                                v.label + "\" is not unit space-like");
  const Exact denom = v.vector[d1 - 1] - v.vector[d1 - 2];
  if (denom.is_zero()) {
    PlaneWall w;
    w.normal.assign(v.vector.begin(), v.vector.end() - 2);
    w.offset = v.vector[d1 - 1];
    return w;
  }
  SphereWall w;
  w.center.reserve(d1 - 2);
  for (size_t i = 0; i + 2 < d1; ++i) w.center.push_back(v.vector[i] / denom);
  w.radius = denom.inverse().abs();
  return w;
}

std::vector<double> to_floats(const std::vector<Exact>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Exact& x : xs) out.push_back(x.to_double());
  return out;
}

double footprint_pair_residual(const UpperHalfSpaceWall& a,
                               const UpperHalfSpaceWall& b, bool tangent) {
  const auto dot = [](const std::vector<double>& x,
                      const std::vector<double>& y) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  if (const SphereWall* sa = std::get_if<SphereWall>(&a)) {
    if (const SphereWall* sb = std::get_if<SphereWall>(&b)) {
      const std::vector<double> ca = to_floats(sa->center);
      const std::vector<double> cb = to_floats(sb->center);
      std::vector<double> diff(ca.size());
      for (size_t i = 0; i < ca.size(); ++i) diff[i] = ca[i] - cb[i];
      const double d2 = dot(diff, diff);
      const double ra = sa->radius.to_double(), rb = sb->radius.to_double();
      if (tangent)
        // Externally or internally tangent, whichever is nearer.
        return std::min(std::abs(std::sqrt(d2) - (ra + rb)),
                        std::abs(std::sqrt(d2) - std::abs(ra - rb)));
      return std::abs(d2 - (ra * ra + rb * rb));
    }
    const PlaneWall& pb = std::get<PlaneWall>(b);
    const double dist =
        std::abs(dot(to_floats(pb.normal), to_floats(sa->center)) -
                 pb.offset.to_double());
    return tangent ? std::abs(dist - sa->radius.to_double()) : dist;
  }
  if (std::holds_alternative<SphereWall>(b))
    return footprint_pair_residual(b, a, tangent);
  const PlaneWall& pa = std::get<PlaneWall>(a);
  const PlaneWall& pb = std::get<PlaneWall>(b);
  const std::vector<double> na = to_floats(pa.normal);
  const std::vector<double> nb = to_floats(pb.normal);
  if (!tangent) return std::abs(dot(na, nb));
  // Tangent planes meet only at infinity: their normals must align.
  double plus = 0, minus = 0;
  for (size_t i = 0; i < na.size(); ++i) {
    plus += (na[i] + nb[i]) * (na[i] + nb[i]);
    minus += (na[i] - nb[i]) * (na[i] - nb[i]);
  }
  return std::sqrt(std::min(plus, minus));
}

StandardConfigurationReport verify_standard_configuration(
    const PolytopeSpec& p) {
  StandardConfigurationReport rep;
  rep.all_match = true;
  for (const FacetNormal& f : p.facets) {
    FootprintEntry entry;
    entry.label = f.label;
    entry.wall = wall_footprint(f);
    const size_t want = f.vector.size() - 2;
    const bool proj_ok = f.a_projection.size() == want;
    if (const PlaneWall* w = std::get_if<PlaneWall>(&entry.wall)) {
      ++rep.plane_count;
      entry.matches_expected = proj_ok && f.family == Family::TypeI &&
                               w->normal == f.a_projection &&
                               w->offset == Exact(1);
    } else {
      ++rep.sphere_count;
      const SphereWall& s = std::get<SphereWall>(entry.wall);
      entry.matches_expected = proj_ok &&
                               (f.family == Family::TypeII ||
                                f.family == Family::TypeIII) &&
                               s.center == f.a_projection &&
                               s.radius == Exact(1);
    }
    if (!entry.matches_expected) {
      rep.all_match = false;
      if (rep.mismatches.size() < 16)
        rep.mismatches.push_back("facet " + f.label +
                                 " does not match its expected footprint");
    }
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace hrap
