#pragma once

// Curvature, measures and inner parallel sets of axisymmetric domains.
//
// Mean curvature is the average of the principal curvatures, signed so that
// a sphere of radius R has M = 1/R and K = 1/R^2. With this convention the
// parallel-coordinate Jacobian of a surface in R^3 is h = 1 - 2 M t + K t^2.

#include <string>
#include <vector>

#include "robin/distance.hpp"
#include "robin/profile.hpp"

namespace robin {

struct Curvatures {
  double mean = 0.0;      // M = (k_meridian + k_parallel) / 2
  double gaussian = 0.0;  // K = k_meridian * k_parallel
  double meridian = 0.0;
  double parallel = 0.0;
};

/// Principal curvatures at parameter u. At an axis endpoint of a sphere-like
/// profile the umbilic limit is returned; throws GeometryError if the curve
/// does not meet the axis orthogonally there (conical point).
Curvatures curvatures(const RevolutionProfile& profile, double u);

enum class Convexity { Convex, Axiconvex, Neither };

std::string to_string(Convexity c);

struct GeometrySummary {
  double area = 0.0;
  double volume = 0.0;
  double total_mean_curvature = 0.0;  // m = integral of M over the surface
  double total_gauss_curvature = 0.0;  // integral of K, = 2 pi chi
  double eta_bar = 0.0;                // inf M over the surface
  double eta_bar_location = 0.0;       // parameter u of the minimum
  double inner_radius = 0.0;
  int euler_characteristic = 2;
  Convexity convexity = Convexity::Neither;
  double quadrature_error = 0.0;  // largest reported quadrature error estimate
};

/// Area, volume, curvature integrals by adaptive Gauss-Kronrod quadrature;
/// eta_bar by a dense scan refined with Brent minimisation; inner radius as
/// the maximum of the meridian-plane distance to the curve.
GeometrySummary summarize(const RevolutionProfile& profile, double quad_tol = 1e-12);

/// Largest distance from a point of the meridian region to the boundary curve.
double inner_radius(const RevolutionProfile& profile);

/// Convexity of the meridian region united with its mirror image; axiconvex
/// when every horizontal slice is a single interval starting at the axis.
Convexity classify_convexity(const RevolutionProfile& profile);

struct SamplingPlan {
  enum class Method { Auto, Exact, Sampled };
  Method method = Method::Auto;
  /// Cells along the larger half-extent of the meridian bounding box on the
  /// coarse grid; the fine grid doubles it.
  int resolution = 128;
  /// Richardson-combine the coarse and fine grids (otherwise the fine grid only).
  bool richardson = true;
  /// Use the OpenMP kernels.
  bool parallel = true;
};

struct ParallelProfile {
  std::vector<double> t_grid;
  std::vector<double> volume_at;  // Vol(Omega_t), Omega_t = {0 < dist(x, boundary) < t}
  std::vector<double> area_at;    // Area of the level surface {dist = t}
  double volume_error = 0.0;      // max |coarse - fine| / 3 over the grid, 0 for exact profiles
  double area_error = 0.0;
  bool exact = false;
  int resolution = 0;
};

/// Parallel-set profile on t in [0, inner radius] with n_t samples. Exact
/// closed forms are used for spheres and tori when the plan allows it.
ParallelProfile parallel_profile(const RevolutionProfile& profile, int n_t, const SamplingPlan& plan = {});

struct MarginReport {
  bool applicable = true;
  double margin = 0.0;     // smallest slack (negative when violated)
  double tolerance = 0.0;  // holds <=> margin >= -tolerance
  double location = 0.0;   // where the smallest slack occurs (t for profiles)
  bool holds = true;
  std::string note;
};

/// Area(dOmega_t) <= (1 - eta_bar t)_+^{n-1} Area(dOmega) on every grid point.
/// A negative `tolerance` selects 3 x the profile's area error estimate plus
/// 1e-12 Area.
MarginReport check_heintze_karcher(const ParallelProfile& pp, double eta_bar, double area0, int n,
                                   double tolerance = -1.0);

/// m >= 2 sqrt(pi) sqrt(Area) for sphere-like convex or axiconvex surfaces;
/// otherwise the report is marked not applicable.
MarginReport check_total_mean_bound(const GeometrySummary& summary, double tolerance = 1e-9);

struct MeanConditionReport {
  double eta_bar = 0.0;
  double lhs = 0.0;  // eta_bar^{n-1}
  double rhs = 0.0;  // n omega_n / Area
  bool holds = false;
  /// Same test with the curvature-sum convention (2 x eta_bar).
  double lhs_sum_convention = 0.0;
  bool holds_sum_convention = false;
};

/// eta_bar^{n-1} >= n omega_n / Area; fails whenever eta_bar <= 0.
MeanConditionReport mean_condition(const GeometrySummary& summary, int n = 3);

}  // namespace robin
