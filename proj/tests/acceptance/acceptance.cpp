// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "robin/axisym.hpp"
#include "robin/cli.hpp"
#include "robin/geometry.hpp"
#include "robin/radial.hpp"
#include "robin/reduction.hpp"

namespace {

using namespace robin;

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Check {
  bool ok = true;
  double worst = 0.0;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void track(double v) { worst = std::max(worst, v); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double secular_root(const RadialBallProblem& p) {
  if (p.alpha.is_finite() && p.alpha.alpha() == 0.0) return 0.0;
  auto f = [&](double lam) { return secular_residual_n3(p, lam); };
  double lo = -1.0, hi = 1e-300;
  while (f(lo) * f(hi) > 0.0) lo *= 2.0;
  auto [a, b] = boost::math::tools::bisect(f, lo, hi, [](double x, double y) { return std::abs(x - y) < 1e-15; });
  return 0.5 * (a + b);
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

struct NamedProfile {
  std::string name;
  RevolutionProfile profile;
};

std::vector<NamedProfile> corpus() {
  std::vector<NamedProfile> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(ROBIN_SPECS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.push_back({f.stem().string(), cli::load_domain_spec(f.string()).profile()});
  for (double m : {0.3, 0.5}) out.push_back({"spheroid_" + fmt(m), RevolutionProfile::spheroid(m, 1.0)});
  return out;
}

// 1
Check radial_oracles() {
  Check c;
  for (double r : linspace(0.5, 2.0, 5))
    for (double a : linspace(-5.0, 0.0, 5)) {
      const RadialBallProblem p{3, r, BoundaryParameter::robin(a)};
      const double e = solve_ball(p, 1e-10).eigenvalue;
      const double ref = secular_root(p);
      const double err = ref == 0.0 ? std::abs(e) : rel(e, ref);
      c.track(err);
      c.expect(err <= 1e-8, "R=" + fmt(r) + " alpha=" + fmt(a));
    }
  for (double r : linspace(0.5, 2.0, 5)) {
    const double e = solve_ball({3, r, BoundaryParameter::dirichlet()}, 1e-10).eigenvalue;
    const double err = rel(e, kPi * kPi / (r * r));
    c.track(err);
    c.expect(err <= 1e-8, "dirichlet R=" + fmt(r));
  }
  c.detail = c.ok ? "max rel err " + fmt(c.worst) : c.detail;
  return c;
}

// 2
Check shell_ball_comparison() {
  Check c;
  double min_margin = HUGE_VAL;
  int cases = 0;
  for (int n : {2, 3, 4, 5})
    for (double ratio : linspace(0.1, 0.9, 9))
      for (double a : {-5.0, -2.0, -1.0, -0.5, -0.1, 0.0}) {
        const ComparisonVerdict v = check_comparison(n, ratio, 1.0, BoundaryParameter::robin(a), 1e-9);
        min_margin = std::min(min_margin, v.margin);
        ++cases;
        c.expect(v.margin >= -1e-9, "n=" + std::to_string(n) + " R1=" + fmt(ratio) + " alpha=" + fmt(a));
      }
  if (c.ok) c.detail = std::to_string(cases) + " cases, min margin " + fmt(min_margin);
  return c;
}

// 3
Check thin_hole_limit() {
  Check c;
  const double mu = solve_shell({3, 1e-3, 1.0, BoundaryParameter::robin(-1)}, 1e-10).eigenvalue;
  const double lam = solve_ball({3, 1.0, BoundaryParameter::robin(-1)}, 1e-10).eigenvalue;
  c.expect(std::abs(mu - lam) <= 1e-3, "difference " + fmt(mu - lam));
  if (c.ok) c.detail = "|mu - lambda| = " + fmt(std::abs(mu - lam));
  return c;
}

// 4
Check scaling_law() {
  Check c;
  std::mt19937 rng(20240917);
  std::uniform_real_distribution<double> scale(0.3, 3.0), radius(0.5, 2.0), alpha(-4.0, 0.0), frac(0.1, 0.9);
  for (int k = 0; k < 20; ++k) {
    const double s = scale(rng), r = radius(rng), a = alpha(rng), f = frac(rng);
    const double big = solve_ball({3, s * r, BoundaryParameter::robin(a)}, 1e-10).eigenvalue;
    const double small = solve_ball({3, r, BoundaryParameter::robin(s * a)}, 1e-10).eigenvalue;
    c.track(rel(big, small / (s * s)));
    c.expect(rel(big, small / (s * s)) <= 1e-8, "ball c=" + fmt(s) + " R=" + fmt(r) + " alpha=" + fmt(a));
    const double big_s = solve_shell({3, f * s * r, s * r, BoundaryParameter::robin(a)}, 1e-10).eigenvalue;
    const double small_s = solve_shell({3, f * r, r, BoundaryParameter::robin(s * a)}, 1e-10).eigenvalue;
    c.track(rel(big_s, small_s / (s * s)));
    c.expect(rel(big_s, small_s / (s * s)) <= 1e-8, "shell c=" + fmt(s) + " R=" + fmt(r) + " alpha=" + fmt(a));
  }
  if (c.ok) c.detail = "20 triples, max rel err " + fmt(c.worst);
  return c;
}

// 5
Check radii_identities() {
  Check c;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> radius(0.05, 20.0), frac(0.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 6);
  for (int k = 0; k < 50; ++k) {
    const double r2 = radius(rng);
    const double area = 4 * kPi * r2 * r2;
    const double volume = frac(rng) * 4 * kPi / 3 * r2 * r2 * r2;
    for (const ReducedShell& s : {shell_radii_3d(area, volume), shell_radii_nd(3, area, volume)}) {
      c.track(std::max(rel(s.outer_area(), area), rel(s.shell_volume(), volume)));
      c.expect(rel(s.outer_area(), area) <= 1e-10 && rel(s.shell_volume(), volume) <= 1e-10,
               "area " + fmt(area) + " volume " + fmt(volume));
    }
    const int n = dim(rng);
    const double an = unit_sphere_area(n) * std::pow(r2, n - 1);
    const double vn = frac(rng) * unit_ball_volume(n) * std::pow(r2, n);
    const ReducedShell s = shell_radii_nd(n, an, vn);
    c.track(std::max(rel(s.outer_area(), an), rel(s.shell_volume(), vn)));
    c.expect(rel(s.outer_area(), an) <= 1e-10 && rel(s.shell_volume(), vn) <= 1e-10, "n=" + std::to_string(n));
    // isoperimetric equality
    c.expect(shell_radii_3d(area, 4 * kPi / 3 * r2 * r2 * r2).inner_radius == 0.0, "ball R=" + fmt(r2));
    c.expect(shell_radii_nd(n, an, unit_ball_volume(n) * std::pow(r2, n)).inner_radius == 0.0,
             "ball n=" + std::to_string(n));
  }
  if (c.ok) c.detail = "50 pairs, max rel err " + fmt(c.worst);
  return c;
}

// 6
Check rprime_certificate() {
  Check c;
  const ParallelProfile ball = parallel_profile(RevolutionProfile::sphere(1.0), 101);
  const RtMap bm = r_of_t(ball, 3, 4 * kPi);
  for (std::size_t k = 0; k < bm.r.size(); ++k) c.expect(std::abs(bm.r[k] - 1 + bm.t_grid[k]) <= 1e-10, "ball r(t)");
  c.track(bm.max_abs_rprime);
  for (double m : {0.3, 0.5, 0.8}) {
    const RevolutionProfile p = RevolutionProfile::spheroid(m, 1.0);
    const RtMap map = r_of_t(parallel_profile(p, 101), 3, summarize(p).area);
    c.track(map.max_abs_rprime);
    c.expect(map.max_abs_rprime <= 1 + 1e-3, "spheroid m=" + fmt(m) + " max|r'| " + fmt(map.max_abs_rprime));
  }
  if (c.ok) c.detail = "max|r'| " + fmt(c.worst);
  return c;
}

// 7
Check chain_on_spheroids() {
  Check c;
  std::ostringstream d;
  for (double m : {0.6, 0.8})
    for (double a : {-0.5, -1.0}) {
      const BoundChainReport r = bound_chain(RevolutionProfile::spheroid(m, 1.0), BoundaryParameter::robin(a));
      const std::string tag = "m=" + fmt(m) + " alpha=" + fmt(a);
      if (!r.lambda1_direct || !r.direct) {
        c.expect(false, tag + " no direct value");
        continue;
      }
      const double lam = *r.lambda1_direct, eps = r.direct->error_estimate;
      c.expect(lam <= r.mu1_shell + eps, tag + " lambda > mu + eps_h");
      c.expect(r.mu1_shell <= r.lambda1_ball + 1e-9, tag + " mu > lambda(ball)");
      c.expect(eps <= 1e-3 * std::abs(lam), tag + " eps_h " + fmt(eps));
      c.track(eps / std::abs(lam));
      d << (d.tellp() ? "; " : "") << tag << ": " << fmt(lam) << " <= " << fmt(r.mu1_shell) << " <= "
        << fmt(r.lambda1_ball);
    }
  if (c.ok) c.detail = d.str() + "; max eps_h/|lambda| " + fmt(c.worst);
  return c;
}

// 8
Check axisym_ball() {
  Check c;
  const RevolutionProfile ball = RevolutionProfile::sphere(1.0);
  const DiscreteEigenResult n0 = solve_domain(ball, BoundaryParameter::neumann());
  // the radial value is 0; relative agreement means agreement to rounding
  c.expect(std::abs(n0.extrapolated) <= 1e-8, "alpha=0 gives " + fmt(n0.extrapolated));
  std::ostringstream d;
  d << "alpha=0: " << fmt(n0.extrapolated);
  for (const BoundaryParameter& a : {BoundaryParameter::robin(-1), BoundaryParameter::dirichlet()}) {
    const DiscreteEigenResult r = solve_domain(ball, a);
    const double ref = solve_ball({3, 1.0, a}, 1e-10).eigenvalue;
    const double err = rel(r.extrapolated, ref);
    c.expect(err <= 1e-4, "alpha=" + a.to_string() + " rel err " + fmt(err));
    c.expect(r.order >= 1.5 && r.order <= 2.5, "alpha=" + a.to_string() + " order " + fmt(r.order));
    d << "; alpha=" << a.to_string() << ": rel err " << fmt(err) << ", order " << fmt(r.order);
  }
  if (c.ok) c.detail = d.str();
  return c;
}

// 9
Check closed_form_conditions() {
  Check c;
  const ConditionValue one = ellipsoid_condition(1.0);
  c.expect(std::abs(one.lhs - 8) <= 1e-12 && std::abs(one.rhs - 8) <= 1e-12, "ellipsoid m=1");
  double prev_gap = HUGE_VAL;
  for (double m : {1 - 1e-2, 1 - 1e-3, 1 - 1e-4, 1 - 1e-5}) {
    const ConditionValue v = ellipsoid_condition(m);
    const double gap = std::abs(v.lhs - 8) + std::abs(v.rhs - 8);
    c.expect(gap < prev_gap, "ellipsoid sides do not approach 8 at m=" + fmt(m));
    prev_gap = gap;
  }
  c.expect(prev_gap <= 1e-3, "ellipsoid gap near m=1 " + fmt(prev_gap));
  c.expect(ellipsoid_condition(0.1).holds, "ellipsoid m=0.1");
  c.expect(torus_condition(0.0).holds && torus_condition(1e-6).holds, "torus m->0");
  c.expect(!torus_condition(0.45).holds, "torus m=0.45");

  // brute-force scan: fine grid, then a finer grid inside the bracketing cell
  auto f = [](double m) {
    const ConditionValue v = torus_condition(m);
    return v.lhs - v.rhs;
  };
  double lo = 0.0, hi = 0.5;
  for (int level = 0; level < 2; ++level) {
    const int n = 100000;
    const double step = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      const double a = lo + i * step;
      if (f(a) >= 0.0 && f(a + step) < 0.0) {
        lo = a;
        hi = a + step;
        break;
      }
    }
  }
  const double scan = 0.5 * (lo + hi);
  const double mstar = torus_condition_threshold();
  c.expect(std::abs(scan - mstar) <= 1e-8, "threshold " + fmt(mstar) + " vs scan " + fmt(scan));
  if (c.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "m* = %.12f, scan %.12f", mstar, scan);
    c.detail = buf;
  }
  return c;
}

double prolate_area(double a, double c) {
  const double e = std::sqrt(1 - a * a / (c * c));
  return 2 * kPi * a * a * (1 + c / (a * e) * std::asin(e));
}

double oblate_area(double a, double c) {
  const double e = std::sqrt(1 - c * c / (a * a));
  return 2 * kPi * a * a * (1 + (1 - e * e) / e * std::atanh(e));
}

// 10
Check geometry_validation() {
  Check c;
  int domains = 0;
  double min_slack = HUGE_VAL, min_at = 0.0, worst_ratio = 0.0;
  for (const NamedProfile& d : corpus()) {
    const GeometrySummary g = summarize(d.profile);
    const bool torus = d.profile.topology() == Topology::TorusLike;
    const double gb = torus ? std::abs(g.total_gauss_curvature) / (4 * kPi) : rel(g.total_gauss_curvature, 4 * kPi);
    c.expect(gb <= 1e-6, d.name + " Gauss-Bonnet " + fmt(gb));
    const ParallelProfile pp = parallel_profile(d.profile, 101);
    const MarginReport hk = check_heintze_karcher(pp, g.eta_bar, g.area, 3);
    c.expect(hk.holds, d.name + " Heintze-Karcher slack " + fmt(hk.margin));
    if (hk.margin < min_slack) {
      min_slack = hk.margin;
      min_at = hk.location;
    }
    if (hk.margin < 0.0) worst_ratio = std::max(worst_ratio, -hk.margin / hk.tolerance);
    ++domains;
  }
  for (double a : {0.3, 0.5, 0.8}) {
    const double q = summarize(RevolutionProfile::spheroid(a, 1.0)).area;
    c.expect(rel(q, prolate_area(a, 1.0)) <= 1e-8, "prolate area a=" + fmt(a));
  }
  c.expect(rel(summarize(RevolutionProfile::spheroid(0.8, 1.0)).area, 9.41222087915991808717) <= 1e-8,
           "frozen spheroid area");
  for (double cc : {0.3, 0.7}) {
    const double q = summarize(RevolutionProfile::spheroid(1.0, cc)).area;
    c.expect(rel(q, oblate_area(1.0, cc)) <= 1e-8, "oblate area c=" + fmt(cc));
  }
  for (double r : {0.15, 0.3, 0.6}) {
    const double q = summarize(RevolutionProfile::torus(1.0, r)).area;
    c.expect(rel(q, 4 * kPi * kPi * r) <= 1e-8, "torus area r=" + fmt(r));
  }
  if (c.ok)
    c.detail = std::to_string(domains) + " domains, min HK slack " + fmt(min_slack) + " at t=" + fmt(min_at) +
               ", worst deficit / sampling tolerance " + fmt(worst_ratio);
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "radial oracle agreement", 5, radial_oracles},
      {2, "shell below ball", 30, shell_ball_comparison},
      {3, "thin-hole limit", 2, thin_hole_limit},
      {4, "scaling law", 5, scaling_law},
      {5, "shell radii identities", 1, radii_identities},
      {6, "r'(t) certificate", 60, rprime_certificate},
      {7, "comparison chain on spheroids", 180, chain_on_spheroids},
      {8, "axisymmetric solver on the ball", 60, axisym_ball},
      {9, "ellipsoid and torus conditions", 1, closed_form_conditions},
      {10, "geometry validation", 30, geometry_validation},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= cr.limit_s;
    const bool pass = c.ok && in_time;
    if (!in_time && c.ok) c.detail += "; over time limit";
    std::printf("%s [%2d] %-34s %7.2f s (limit %3.0f s)  %s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_s, c.detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
