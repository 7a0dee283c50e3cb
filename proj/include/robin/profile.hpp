#pragma once

// Meridian curves of axisymmetric domains in R^3.
//
// A profile is a parametric curve u -> (s(u), z(u)), u in [0, 1], in the
// half-plane s >= 0, where s is the distance from the symmetry axis. The
// curve is always stored counter-clockwise around the meridian region, so
// (z', -s') / |gamma'| is the outward normal.
//
//   SphereLike: s(0) = s(1) = 0, the region is bounded by the curve and the
//               axis segment between its endpoints.
//   TorusLike:  closed curve with s > 0 everywhere, u is periodic.

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace robin {

enum class Topology { SphereLike, TorusLike };

enum class Family { Sphere, Spheroid, Torus, Sampled };

struct CurvePoint {
  double s = 0.0, z = 0.0;
  double ds = 0.0, dz = 0.0;    // first derivatives in u
  double dds = 0.0, ddz = 0.0;  // second derivatives in u
};

using Point2 = std::array<double, 2>;

/// Periodic cubic interpolating spline of a closed planar polygon, chord-length
/// parametrised.
class PeriodicSpline {
 public:
  explicit PeriodicSpline(const std::vector<Point2>& points);

  double period() const { return period_; }
  /// Value and derivatives in the chord-length parameter tau (wrapped).
  CurvePoint eval(double tau) const;

 private:
  std::vector<double> knots_;  // size m + 1, knots_[m] = period
  std::vector<Point2> values_;
  std::vector<Point2> second_;  // second derivatives at knots
  double period_ = 0.0;
};

class RevolutionProfile {
 public:
  static RevolutionProfile sphere(double radius);
  /// `a`: semi-axis orthogonal to the symmetry axis, `c`: semi-axis along it.
  static RevolutionProfile spheroid(double a, double c);
  /// Major radius R (axis to tube centre) and tube radius r, 0 < r < R.
  static RevolutionProfile torus(double major, double minor);
  /// Sphere-like: samples run from one axis point to the other, interior
  /// samples with s > 0. Torus-like: a closed polygon (first point not
  /// repeated) with s > 0. Orientation is normalised to counter-clockwise.
  static RevolutionProfile sampled(std::vector<Point2> samples, Topology topology);

  CurvePoint eval(double u) const;

  Topology topology() const { return topology_; }
  Family family() const { return family_; }
  /// Family parameters: {R}, {a, c}, {R, r} or empty for sampled curves.
  const std::vector<double>& parameters() const { return params_; }
  std::string describe() const;

  /// Dense polyline u_k = k / segments (k = 0..segments).
  std::vector<Point2> polyline(int segments) const;

 private:
  RevolutionProfile() = default;

  Family family_ = Family::Sphere;
  Topology topology_ = Topology::SphereLike;
  std::vector<double> params_;
  std::shared_ptr<const PeriodicSpline> spline_;
  double spline_span_ = 0.0;  // parameter length of [0, 1] in spline units
};

}  // namespace robin
