#include "robin/reduction.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "robin/radial.hpp"

namespace robin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string deficit_message(double deficit) {
  return "isoperimetric inequality violated: deficit " + std::to_string(deficit);
}

// asin(x) / x, accurate down to x = 0
double asin_ratio(double x) {
  if (x < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + 3.0 * x2 * x2 / 40.0;
  }
  return std::asin(x) / x;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
  double sum = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) sum += 0.5 * (t[k] - t[k - 1]) * (f[k] + f[k - 1]);
  return sum;
}

}  // namespace

double ReducedShell::shell_volume() const {
  const double s = unit_sphere_area(dimension);
  return s * (std::pow(outer_radius, dimension) - std::pow(inner_radius, dimension)) / dimension;
}

double ReducedShell::outer_area() const {
  return unit_sphere_area(dimension) * std::pow(outer_radius, dimension - 1);
}

ReducedShell shell_radii_3d(double area, double volume) {
  if (!(area > 0.0) || !(volume > 0.0)) throw std::invalid_argument("area and volume must be positive");
  const double root_pi = std::sqrt(kPi);
  const double a32 = area * std::sqrt(area);
  double deficit = a32 - 6.0 * root_pi * volume;
  if (std::abs(deficit) <= 64.0 * kEps * a32) deficit = 0.0;
  if (deficit < 0.0) throw std::domain_error(deficit_message(deficit));
  ReducedShell s;
  s.dimension = 3;
  s.inner_radius = std::cbrt(deficit) / (2.0 * root_pi);
  s.outer_radius = std::sqrt(area / (4.0 * kPi));
  return s;
}

ReducedShell shell_radii_nd(int n, double area, double volume) {
  if (n < 2) throw std::invalid_argument("shell radii need n >= 2");
  if (!(area > 0.0) || !(volume > 0.0)) throw std::invalid_argument("area and volume must be positive");
  const double sigma = unit_sphere_area(n);
  const double p = 1.0 / (n - 1);
  const double lead = std::pow(area, n * p);
  double deficit = lead - n * std::pow(sigma, p) * volume;
  if (std::abs(deficit) <= 64.0 * kEps * lead) deficit = 0.0;
  if (deficit < 0.0) throw std::domain_error(deficit_message(deficit));
  ReducedShell s;
  s.dimension = n;
  s.inner_radius = std::pow(deficit, 1.0 / n) / std::pow(sigma, p);
  s.outer_radius = std::pow(area / sigma, p);
  return s;
}

RtMap r_of_t(const ParallelProfile& pp, int n, double area) {
  if (n < 2) throw std::invalid_argument("r(t) needs n >= 2");
  const std::size_t count = pp.t_grid.size();
  if (count < 2 || pp.volume_at.size() != count || pp.area_at.size() != count)
    throw std::invalid_argument("malformed parallel profile");
  const double sigma = unit_sphere_area(n);
  const double p = 1.0 / (n - 1);
  const double lead = std::pow(area, n * p);
  const double coeff = n * std::pow(sigma, p);

  RtMap map;
  map.t_grid = pp.t_grid;
  map.r.resize(count);
  map.rprime.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double d = lead - coeff * pp.volume_at[k];
    const bool degenerate = d <= 64.0 * kEps * lead;
    map.r[k] = degenerate ? 0.0 : std::pow(d, 1.0 / n) / std::pow(sigma, p);
    if (degenerate) {
      map.rprime[k] = std::numeric_limits<double>::quiet_NaN();
      ++map.degenerate_points;
      continue;
    }
    map.rprime[k] = -pp.area_at[k] / std::pow(d, (n - 1.0) / n);
    if (std::abs(map.rprime[k]) > map.max_abs_rprime) {
      map.max_abs_rprime = std::abs(map.rprime[k]);
      map.argmax_t = pp.t_grid[k];
    }
  }
  return map;
}

TransportedQuotient transported_quotient(const ParallelProfile& pp, const RtMap& map, const ReducedShell& shell,
                                         const BoundaryParameter& alpha, const std::function<double(double)>& psi,
                                         const std::function<double(double)>& dpsi) {
  if (!alpha.is_finite()) throw std::invalid_argument("transported quotient needs a finite boundary parameter");
  const double a = alpha.alpha();
  const int n = shell.dimension;
  const std::size_t count = map.t_grid.size();
  std::vector<double> grad(count), mass(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double r = map.r[k];
    if (std::isnan(map.rprime[k])) {
      grad[k] = 0.0;
      mass[k] = psi(r) * psi(r) * pp.area_at[k];
      continue;
    }
    const double d = dpsi(r) * map.rprime[k];
    grad[k] = d * d * pp.area_at[k];
    mass[k] = psi(r) * psi(r) * pp.area_at[k];
  }
  const double area0 = pp.area_at.front();
  const double edge = psi(shell.outer_radius);

  TransportedQuotient q;
  q.domain = (trapezoid(map.t_grid, grad) + a * edge * edge * area0) / trapezoid(map.t_grid, mass);

  using boost::math::quadrature::gauss_kronrod;
  auto weight = [n](double r) { return std::pow(r, n - 1); };
  const double r1 = shell.inner_radius, r2 = shell.outer_radius;
  const double g =
      gauss_kronrod<double, 61>::integrate([&](double r) { return dpsi(r) * dpsi(r) * weight(r); }, r1, r2, 15, 1e-13);
  const double m =
      gauss_kronrod<double, 61>::integrate([&](double r) { return psi(r) * psi(r) * weight(r); }, r1, r2, 15, 1e-13);
  q.shell = (g + a * edge * edge * weight(r2)) / m;
  return q;
}

std::string to_string(AdmissibilityRoute route) {
  switch (route) {
    case AdmissibilityRoute::ConvexOrAxiconvex:
      return "convex-or-axiconvex";
    case AdmissibilityRoute::MeanCurvature:
      return "mean-curvature";
    case AdmissibilityRoute::None:
      break;
  }
  return "none";
}

BoundChainReport bound_chain(const RevolutionProfile& profile, const BoundaryParameter& alpha,
                             const ChainOptions& opts) {
  BoundChainReport rep;
  rep.domain = profile.describe();
  rep.alpha = alpha;
  rep.geometry = summarize(profile);
  rep.shell = shell_radii_3d(rep.geometry.area, rep.geometry.volume);
  rep.mean = mean_condition(rep.geometry, 3);

  const bool sphere_like = rep.geometry.euler_characteristic == 2;
  const bool convexish =
      rep.geometry.convexity == Convexity::Convex || rep.geometry.convexity == Convexity::Axiconvex;
  if (sphere_like && convexish)
    rep.route = AdmissibilityRoute::ConvexOrAxiconvex;
  else if (rep.mean.holds)
    rep.route = AdmissibilityRoute::MeanCurvature;
  rep.admissible = rep.route != AdmissibilityRoute::None;

  const double r1 = rep.shell.inner_radius, r2 = rep.shell.outer_radius;
  std::exception_ptr errors[3];
#pragma omp parallel sections
  {
#pragma omp section
    {
      try {
        if (opts.direct) rep.direct = solve_domain(profile, alpha, opts.mesh_h);
      } catch (...) {
        errors[0] = std::current_exception();
      }
    }
#pragma omp section
    {
      try {
        rep.mu1_shell = r1 > 0.0 ? solve_shell({3, r1, r2, alpha}, opts.tol).eigenvalue
                                 : solve_ball({3, r2, alpha}, opts.tol).eigenvalue;
      } catch (...) {
        errors[1] = std::current_exception();
      }
    }
#pragma omp section
    {
      try {
        rep.lambda1_ball = solve_ball({3, r2, alpha}, opts.tol).eigenvalue;
      } catch (...) {
        errors[2] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  rep.margin_shell_ball = rep.lambda1_ball - rep.mu1_shell;
  rep.tolerance_shell_ball = opts.comparison_tol;
  rep.holds_shell_ball = rep.margin_shell_ball >= -rep.tolerance_shell_ball;
  rep.assert_shell_ball = alpha.is_nonpositive();

  if (rep.direct) {
    rep.lambda1_direct = rep.direct->extrapolated;
    rep.margin_domain_shell = rep.mu1_shell - *rep.lambda1_direct;
    rep.tolerance_domain_shell = rep.direct->error_estimate + 1e-9 * std::max(1.0, std::abs(rep.mu1_shell));
    rep.holds_domain_shell = rep.margin_domain_shell >= -rep.tolerance_domain_shell;
    rep.assert_domain_shell = rep.admissible;
  } else {
    rep.margin_domain_shell = std::numeric_limits<double>::quiet_NaN();
  }

  if (opts.certificate) {
    const ParallelProfile pp = parallel_profile(profile, opts.certificate_points, opts.sampling);
    rep.max_abs_rprime = r_of_t(pp, 3, rep.geometry.area).max_abs_rprime;
  }
  return rep;
}

ConditionValue ellipsoid_condition(double m) {
  if (!(m > 0.0 && m <= 1.0)) throw std::invalid_argument("ellipsoid condition needs 0 < m <= 1");
  const double x = std::sqrt(std::max(0.0, 1.0 - m * m));
  const double q = 1.0 + m * m;
  ConditionValue v;
  v.lhs = m * q * q * (m + asin_ratio(x));
  v.rhs = 8.0 * m * m;
  v.holds = v.lhs >= v.rhs;
  return v;
}

ConditionValue torus_condition(double m) {
  if (!(m >= 0.0 && m <= 0.5)) throw std::invalid_argument("torus condition needs 0 <= m <= 1/2");
  ConditionValue v;
  v.lhs = (1.0 - 2.0 * m) * (1.0 - 2.0 * m) * kPi;
  v.rhs = (1.0 - m) * (1.0 - m) * m;
  v.holds = v.lhs >= v.rhs;
  return v;
}

double torus_condition_threshold(double tol) {
  double lo = 0.0, hi = 0.5;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (torus_condition(mid).holds ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::pair<double, double>> ellipsoid_condition_scan(int samples, double tol) {
  if (samples < 2) throw std::invalid_argument("scan needs at least 2 samples");
  auto gap = [](double m) {
    const ConditionValue v = ellipsoid_condition(m);
    return v.lhs - v.rhs;
  };
  auto root = [&](double lo, double hi) {
    const bool lo_holds = gap(lo) >= 0.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      ((gap(mid) >= 0.0) == lo_holds ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  std::vector<std::pair<double, double>> out;
  double prev_m = 1.0 / samples;
  bool prev = gap(prev_m) >= 0.0;
  double start = prev ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  for (int k = 2; k <= samples; ++k) {
    const double m = static_cast<double>(k) / samples;
    const bool now = gap(m) >= 0.0;
    if (now != prev) {
      const double x = root(prev_m, m);
      if (now)
        start = x;
      else
        out.emplace_back(start, x);
    }
    prev = now;
    prev_m = m;
  }
  if (prev) out.emplace_back(start, 1.0);
  return out;
}

}  // namespace robin
