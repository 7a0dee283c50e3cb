#include "robin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "robin/errors.hpp"
#include "robin/radial.hpp"

namespace robin {

namespace {

constexpr double kPi = std::numbers::pi;

double speed(const CurvePoint& q) { return std::hypot(q.ds, q.dz); }

double meridian_curvature(const CurvePoint& q) {
  const double v = speed(q);
  return (q.ds * q.ddz - q.dz * q.dds) / (v * v * v);
}

bool at_axis_end(const RevolutionProfile& profile, double u) {
  return profile.topology() == Topology::SphereLike && (u <= 0.0 || u >= 1.0);
}

struct Integral {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
Integral integrate(F&& f, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  Integral out;
  out.value = gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 20, tol, &out.error);
  if (!std::isfinite(out.value)) throw NumericalError("profile quadrature produced a non-finite value");
  return out;
}

}  // namespace

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::Convex: return "convex";
    case Convexity::Axiconvex: return "axiconvex";
    case Convexity::Neither: return "neither";
  }
  return "unknown";
}

Curvatures curvatures(const RevolutionProfile& profile, double u) {
  if (profile.topology() == Topology::SphereLike) {
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("curve parameter outside [0, 1]");
  }
  const CurvePoint q = profile.eval(u);
  const double v = speed(q);
  if (!(v > 0.0)) throw GeometryError("profile is singular at the requested parameter");
  Curvatures k;
  k.meridian = meridian_curvature(q);
  if (at_axis_end(profile, u) || q.s <= 0.0) {
    // the curve must cross the axis orthogonally for the umbilic limit to exist
    if (std::abs(q.dz) > 1e-6 * v) throw GeometryError("profile meets the axis at a conical point");
    k.parallel = k.meridian;
  } else {
    k.parallel = q.dz / (q.s * v);
  }
  k.mean = 0.5 * (k.meridian + k.parallel);
  k.gaussian = k.meridian * k.parallel;
  return k;
}

Convexity classify_convexity(const RevolutionProfile& profile) {
  if (profile.topology() == Topology::TorusLike) return Convexity::Neither;
  constexpr int kSegments = 4000;
  const std::vector<Point2> half = profile.polyline(kSegments);
  double scale = 0.0;
  for (const Point2& p : half) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});

  // mirrored closed polygon, counter-clockwise
  std::vector<Point2> closed = half;
  for (int i = kSegments - 1; i >= 1; --i) closed.push_back({-half[i][0], half[i][1]});
  bool convex = true;
  const std::size_t m = closed.size();
  for (std::size_t i = 0; i < m && convex; ++i) {
    const Point2& a = closed[i];
    const Point2& b = closed[(i + 1) % m];
    const Point2& c = closed[(i + 2) % m];
    const double cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
    if (cross < -1e-12 * scale * scale) convex = false;
  }
  if (convex) return Convexity::Convex;

  for (int i = 0; i < kSegments; ++i)
    if (half[i + 1][1] < half[i][1] - 1e-12 * scale) return Convexity::Neither;
  return Convexity::Axiconvex;
}

double inner_radius(const RevolutionProfile& profile) {
  const BoundaryDistance dist(profile);
  const SamplingGrid grid = make_sampling_grid(dist, 96);
  std::vector<double> field(grid.node_count());
  kernels::distance_field_omp(dist, grid, field);
  const auto best = std::max_element(field.begin(), field.end());
  if (*best <= 0.0) throw GeometryError("meridian region contains no grid point");
  const int idx = static_cast<int>(best - field.begin());
  Point2 p = grid.node(idx % (grid.ns + 1), idx / (grid.ns + 1));
  double value = *best;

  // compass search; s stays in the closed half-plane
  double step = grid.h;
  while (step > 1e-13 * grid.h * grid.ns) {
    bool moved = false;
    const Point2 moves[4] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const Point2& mv : moves) {
      const Point2 q{std::max(0.0, p[0] + mv[0]), p[1] + mv[1]};
      const double d = dist.signed_distance(q);
      if (d > value) {
        value = d;
        p = q;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return value;
}

GeometrySummary summarize(const RevolutionProfile& profile, double quad_tol) {
  if (!(quad_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  GeometrySummary g;
  const bool sphere_like = profile.topology() == Topology::SphereLike;

  const Integral area = integrate(
      [&](double u) {
        const CurvePoint q = profile.eval(u);
        return 2.0 * kPi * q.s * speed(q);
      },
      quad_tol);
  const Integral volume = integrate(
      [&](double u) {
        const CurvePoint q = profile.eval(u);
        return kPi * q.s * q.s * q.dz;
      },
      quad_tol);
  // M dS = pi (k_m s |gamma'| + z') du and K dS = 2 pi k_m z' du stay regular on the axis.
  const Integral mean = integrate(
      [&](double u) {
        const CurvePoint q = profile.eval(u);
        return kPi * (meridian_curvature(q) * q.s * speed(q) + q.dz);
      },
      quad_tol);
  const Integral gauss = integrate(
      [&](double u) {
        const CurvePoint q = profile.eval(u);
        return 2.0 * kPi * meridian_curvature(q) * q.dz;
      },
      quad_tol);

  g.area = area.value;
  g.volume = volume.value;
  g.total_mean_curvature = mean.value;
  g.total_gauss_curvature = gauss.value;
  g.quadrature_error = std::max({area.error, volume.error, mean.error, gauss.error});
  if (!(g.area > 0.0) || !(g.volume > 0.0)) throw GeometryError("profile encloses no volume");

  // eta_bar: dense scan then Brent refinement around the smallest sample
  constexpr int kScan = 4000;
  double best_u = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kScan; ++k) {
    const double u = static_cast<double>(k) / kScan;
    if (!sphere_like && k == kScan) break;
    const double M = curvatures(profile, u).mean;
    if (M < best) {
      best = M;
      best_u = u;
    }
  }
  double lo = best_u - 1.0 / kScan;
  double hi = best_u + 1.0 / kScan;
  if (sphere_like) {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
  }
  auto mean_at = [&](double u) {
    if (!sphere_like) u -= std::floor(u);
    return curvatures(profile, u).mean;
  };
  const auto [u_min, m_min] = boost::math::tools::brent_find_minima(mean_at, lo, hi, 52);
  if (m_min < best) {
    best = m_min;
    best_u = sphere_like ? u_min : u_min - std::floor(u_min);
  }
  g.eta_bar = best;
  g.eta_bar_location = best_u;

  g.inner_radius = inner_radius(profile);
  g.euler_characteristic = sphere_like ? 2 : 0;
  g.convexity = classify_convexity(profile);
  return g;
}

ParallelProfile parallel_profile(const RevolutionProfile& profile, int n_t, const SamplingPlan& plan) {
  if (n_t < 2) throw std::invalid_argument("parallel profile needs n_t >= 2");
  const Family fam = profile.family();
  const bool closed_form = fam == Family::Sphere || fam == Family::Torus;
  if (plan.method == SamplingPlan::Method::Exact && !closed_form)
    throw std::invalid_argument("exact parallel sets are only available for spheres and tori");
  const bool exact = closed_form && plan.method != SamplingPlan::Method::Sampled;

  ParallelProfile pp;
  pp.exact = exact;
  pp.t_grid.resize(n_t);
  pp.volume_at.resize(n_t);
  pp.area_at.resize(n_t);

  if (exact) {
    const std::vector<double>& par = profile.parameters();
    const double R = fam == Family::Sphere ? par[0] : par[1];
    for (int k = 0; k < n_t; ++k) {
      const double t = (k + 1 == n_t) ? R : R * k / (n_t - 1);
      const double left = R - t;
      pp.t_grid[k] = t;
      if (fam == Family::Sphere) {
        pp.volume_at[k] = 4.0 * kPi / 3.0 * (R * R * R - left * left * left);
        pp.area_at[k] = 4.0 * kPi * left * left;
      } else {
        // inner parallel bodies of a solid torus are solid tori with tube radius r - t
        const double major = par[0];
        pp.volume_at[k] = 2.0 * kPi * kPi * major * (R * R - left * left);
        pp.area_at[k] = 4.0 * kPi * kPi * major * left;
      }
    }
    return pp;
  }

  const double R = inner_radius(profile);
  for (int k = 0; k < n_t; ++k) pp.t_grid[k] = (k + 1 == n_t) ? R : R * k / (n_t - 1);

  const BoundaryDistance dist(profile, 4096);
  auto measure = [&](int resolution) {
    const SamplingGrid grid = make_sampling_grid(dist, resolution);
    std::vector<double> field(grid.node_count());
    if (plan.parallel) {
      kernels::distance_field_omp(dist, grid, field);
      return kernels::level_set_measures_omp(grid, field, pp.t_grid);
    }
    kernels::distance_field_serial(dist, grid, field);
    return kernels::level_set_measures_serial(grid, field, pp.t_grid);
  };

  const kernels::LevelSetMeasures fine = measure(2 * plan.resolution);
  pp.resolution = 2 * plan.resolution;
  if (!plan.richardson) {
    pp.volume_at = fine.volume;
    pp.area_at = fine.area;
    return pp;
  }
  const kernels::LevelSetMeasures coarse = measure(plan.resolution);
  for (int k = 0; k < n_t; ++k) {
    pp.volume_at[k] = (4.0 * fine.volume[k] - coarse.volume[k]) / 3.0;
    pp.area_at[k] = (4.0 * fine.area[k] - coarse.area[k]) / 3.0;
    pp.volume_error = std::max(pp.volume_error, std::abs(fine.volume[k] - coarse.volume[k]) / 3.0);
    pp.area_error = std::max(pp.area_error, std::abs(fine.area[k] - coarse.area[k]) / 3.0);
  }
  pp.volume_at[0] = 0.0;
  return pp;
}

MarginReport check_heintze_karcher(const ParallelProfile& pp, double eta_bar, double area0, int n,
                                   double tolerance) {
  if (n < 2) throw std::invalid_argument("Heintze-Karcher check needs n >= 2");
  if (pp.t_grid.empty() || pp.t_grid.size() != pp.area_at.size())
    throw std::invalid_argument("malformed parallel profile");
  MarginReport r;
  r.tolerance = tolerance >= 0.0 ? tolerance : 3.0 * pp.area_error + 1e-12 * area0;
  r.margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < pp.t_grid.size(); ++k) {
    const double factor = std::max(0.0, 1.0 - eta_bar * pp.t_grid[k]);
    const double slack = std::pow(factor, n - 1) * area0 - pp.area_at[k];
    if (slack < r.margin) {
      r.margin = slack;
      r.location = pp.t_grid[k];
    }
  }
  r.holds = r.margin >= -r.tolerance;
  return r;
}

MarginReport check_total_mean_bound(const GeometrySummary& summary, double tolerance) {
  MarginReport r;
  r.tolerance = tolerance;
  const bool admissible = summary.euler_characteristic == 2 &&
                          (summary.convexity == Convexity::Convex || summary.convexity == Convexity::Axiconvex);
  r.margin = summary.total_mean_curvature - 2.0 * std::sqrt(kPi) * std::sqrt(summary.area);
  if (!admissible) {
    r.applicable = false;
    r.holds = false;
    r.note = "requires a sphere-like convex or axiconvex surface";
    return r;
  }
  r.holds = r.margin >= -tolerance;
  return r;
}

MeanConditionReport mean_condition(const GeometrySummary& summary, int n) {
  if (n < 2) throw std::invalid_argument("mean-curvature condition needs n >= 2");
  MeanConditionReport r;
  r.eta_bar = summary.eta_bar;
  r.rhs = n * unit_ball_volume(n) / summary.area;
  r.lhs = std::pow(summary.eta_bar, n - 1);
  r.holds = summary.eta_bar > 0.0 && r.lhs >= r.rhs;
  r.lhs_sum_convention = std::pow(2.0 * summary.eta_bar, n - 1);
  r.holds_sum_convention = summary.eta_bar > 0.0 && r.lhs_sum_convention >= r.rhs;
  return r;
}

}  // namespace robin
