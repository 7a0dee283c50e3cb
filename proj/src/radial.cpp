#include "robin/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "robin/errors.hpp"

namespace robin {

void RadialBallProblem::validate() const {
  if (dimension < 1) throw std::invalid_argument("ball dimension must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("ball radius must be positive");
}

void RadialShellProblem::validate() const {
  if (dimension < 1) throw std::invalid_argument("shell dimension must be >= 1");
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius) || !std::isfinite(outer_radius))
    throw std::invalid_argument("shell radii must satisfy 0 < R1 < R2");
}

double unit_sphere_area(int dimension) {
  const double half = 0.5 * dimension;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double unit_ball_volume(int dimension) {
  const double half = 0.5 * dimension;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

namespace {

double weight(int n, double r) { return n == 1 ? 1.0 : std::pow(r, n - 1); }

// Symmetric tridiagonal pencil of the finite-volume scheme.
//   K = tridiag(-c_{i}, c_i + c_{i+1} (+ outer term on the last row), -c_{i+1})
//   M = diag(cell volumes)
struct Pencil {
  int n = 3;
  double inner = 0.0;
  double outer = 1.0;
  double h = 0.0;
  std::vector<double> centers;
  std::vector<double> mass;
  std::vector<double> coupling;  // interior faces 1..N-1, stored at index j-1
  double outer_coef = 0.0;       // added to K(N-1, N-1)
  BoundaryParameter alpha = BoundaryParameter::neumann();

  int size() const { return static_cast<int>(mass.size()); }
  double diag(int i) const {
    double d = 0.0;
    if (i > 0) d += coupling[i - 1];
    if (i + 1 < size()) d += coupling[i];
    if (i + 1 == size()) d += outer_coef;
    return d;
  }
};

Pencil build_pencil(int n, double inner, double outer, const BoundaryParameter& alpha, int cells) {
  Pencil p;
  p.n = n;
  p.inner = inner;
  p.outer = outer;
  p.alpha = alpha;
  p.h = (outer - inner) / cells;
  p.centers.resize(cells);
  p.mass.resize(cells);
  p.coupling.resize(cells > 0 ? cells - 1 : 0);
  for (int i = 0; i < cells; ++i) {
    const double left = inner + i * p.h;
    const double right = (i + 1 == cells) ? outer : inner + (i + 1) * p.h;
    p.centers[i] = inner + (i + 0.5) * p.h;
    // exact cell measure of r^{n-1} dr
    p.mass[i] = (std::pow(right, n) - std::pow(left, n)) / n;
  }
  for (int j = 1; j < cells; ++j) p.coupling[j - 1] = weight(n, inner + j * p.h) / p.h;

  const double wb = weight(n, outer);
  if (alpha.is_dirichlet()) {
    p.outer_coef = 2.0 * wb / p.h;
  } else {
    // phi(R) = phi_{N-1} / (1 + alpha h / 2) from phi(R) ~ phi_{N-1} + (h/2) phi'(R)
    p.outer_coef = alpha.alpha() * wb / (1.0 + 0.5 * alpha.alpha() * p.h);
  }
  return p;
}

// Quotient evaluated in flux form to avoid cancellation in K x.
double quotient(const Pencil& p, std::span<const double> x) {
  double num = 0.0;
  double den = 0.0;
  const int N = p.size();
  for (int i = 0; i < N; ++i) den += p.mass[i] * x[i] * x[i];
  for (int j = 1; j < N; ++j) {
    const double d = x[j] - x[j - 1];
    num += p.coupling[j - 1] * d * d;
  }
  num += p.outer_coef * x[N - 1] * x[N - 1];
  return num / den;
}

// Number of eigenvalues of (K, M) below sigma (Sylvester inertia of K - sigma M).
int negative_pivots(const Pencil& p, double sigma) {
  const int N = p.size();
  int count = 0;
  double d = 0.0;
  for (int i = 0; i < N; ++i) {
    const double a = p.diag(i) - sigma * p.mass[i];
    if (i == 0) {
      d = a;
    } else {
      const double b = p.coupling[i - 1];
      d = a - b * b / d;
    }
    if (d < 0.0) ++count;
    if (d == 0.0) d = -1e-300;
  }
  return count;
}

struct DiscreteEigen {
  double value = 0.0;
  std::vector<double> vector;
};

DiscreteEigen smallest_eigenpair(const Pencil& p) {
  const int N = p.size();
  std::vector<double> x(N, 1.0);
  const double q_const = quotient(p, x);

  // Constant vector is an eigenvector exactly when the outer term vanishes.
  if (p.alpha.is_finite() && p.alpha.alpha() == 0.0) return {0.0, x};

  double lo = std::min(q_const, 0.0) - 1.0;
  for (int guard = 0; negative_pivots(p, lo) > 0; ++guard) {
    if (guard > 200) throw NumericalError("radial solver: no lower bound for the first eigenvalue");
    lo -= std::max(1.0, std::abs(lo));
  }
  double hi = q_const + 1e-12 * (1.0 + std::abs(q_const));
  if (negative_pivots(p, hi) == 0) return {q_const, x};

  const double scale = std::max(1.0, std::abs(q_const));
  while (hi - lo > 1e-6 * std::max(scale, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (negative_pivots(p, mid) == 0)
      lo = mid;
    else
      hi = mid;
  }

  // LDL^T of K - lo M, then inverse iteration.
  std::vector<double> d(N);
  std::vector<double> l(N, 0.0);
  for (int i = 0; i < N; ++i) {
    const double a = p.diag(i) - lo * p.mass[i];
    if (i == 0) {
      d[i] = a;
    } else {
      const double b = -p.coupling[i - 1];
      l[i] = b / d[i - 1];
      d[i] = a - l[i] * b;
    }
    if (d[i] == 0.0) d[i] = 1e-300;
  }

  std::vector<double> y(N);
  double value = q_const;
  for (int it = 0; it < 200; ++it) {
    for (int i = 0; i < N; ++i) y[i] = p.mass[i] * x[i];
    for (int i = 1; i < N; ++i) y[i] -= l[i] * y[i - 1];
    for (int i = 0; i < N; ++i) y[i] /= d[i];
    for (int i = N - 2; i >= 0; --i) y[i] -= l[i + 1] * y[i + 1];

    double norm = 0.0;
    for (int i = 0; i < N; ++i) norm += p.mass[i] * y[i] * y[i];
    norm = std::sqrt(norm);
    const double sign = y[N / 2] < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < N; ++i) x[i] = sign * y[i] / norm;

    const double next = quotient(p, x);
    const bool done = std::abs(next - value) <= 4e-15 * std::max(1.0, std::abs(next));
    value = next;
    if (done && it > 0) return {value, x};
  }
  throw NumericalError("radial solver: inverse iteration did not converge");
}

// Outer-boundary residual from the quadratic through the last three cell values.
double outer_residual(const Pencil& p, std::span<const double> phi) {
  const int N = p.size();
  if (N < 3) return 0.0;
  const double h = p.h;
  const double f0 = phi[N - 1], f1 = phi[N - 2], f2 = phi[N - 3];
  // nodes at -h/2, -3h/2, -5h/2 relative to the outer radius
  const double value = (15.0 * f0 - 10.0 * f1 + 3.0 * f2) / 8.0;
  const double slope = (2.0 * f0 - 3.0 * f1 + f2) / h;
  if (p.alpha.is_dirichlet()) return std::abs(value);
  return std::abs(slope + p.alpha.alpha() * value);
}

int initial_cells(double length, const BoundaryParameter& alpha) {
  int cells = 200;
  if (alpha.is_finite()) {
    const double need = 4.0 * std::abs(alpha.alpha()) * length;
    if (need > cells) cells = static_cast<int>(std::ceil(need));
  }
  return cells;
}

RadialEigenpair solve_radial(int n, double inner, double outer, const BoundaryParameter& alpha, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  constexpr int kMaxCells = 1 << 22;

  int cells = initial_cells(outer - inner, alpha);
  DiscreteEigen coarse = smallest_eigenpair(build_pencil(n, inner, outer, alpha, cells));
  double previous_extrapolate = 0.0;
  bool have_extrapolate = false;
  double last_error = std::numeric_limits<double>::infinity();

  while (true) {
    const int fine_cells = 2 * cells;
    Pencil fine_pencil = build_pencil(n, inner, outer, alpha, fine_cells);
    DiscreteEigen fine = smallest_eigenpair(fine_pencil);
    const double extrapolate = (4.0 * fine.value - coarse.value) / 3.0;
    if (have_extrapolate) {
      last_error = std::abs(extrapolate - previous_extrapolate);
      if (last_error <= tol * std::max(1.0, std::abs(extrapolate))) {
        RadialEigenpair out;
        out.eigenvalue = extrapolate;
        out.grid = fine_pencil.centers;
        out.profile = std::move(fine.vector);
        out.boundary_residual = outer_residual(fine_pencil, out.profile);
        out.error_estimate = last_error;
        out.cells = fine_cells;
        return out;
      }
    }
    if (fine_cells >= kMaxCells) {
      std::ostringstream msg;
      msg << "radial solver: no convergence at " << fine_cells << " cells; last extrapolates "
          << previous_extrapolate << ", " << extrapolate << " (difference " << last_error << ")";
      throw NumericalError(msg.str());
    }
    previous_extrapolate = extrapolate;
    have_extrapolate = true;
    coarse = std::move(fine);
    cells = fine_cells;
  }
}

}  // namespace

double discrete_radial_eigenvalue(int dimension, double inner, double outer, const BoundaryParameter& alpha,
                                  int cells) {
  if (cells < 3) throw std::invalid_argument("need at least 3 cells");
  return smallest_eigenpair(build_pencil(dimension, inner, outer, alpha, cells)).value;
}

RadialEigenpair solve_ball(const RadialBallProblem& problem, double tol) {
  problem.validate();
  return solve_radial(problem.dimension, 0.0, problem.radius, problem.alpha, tol);
}

RadialEigenpair solve_shell(const RadialShellProblem& problem, double tol) {
  problem.validate();
  return solve_radial(problem.dimension, problem.inner_radius, problem.outer_radius, problem.alpha, tol);
}

// n = 3: y = r phi solves y'' = -lambda y.
double secular_residual_n3(const RadialBallProblem& problem, double lambda) {
  problem.validate();
  if (problem.dimension != 3) throw UnsupportedError("closed-form radial residual is only available for n = 3");
  const double R = problem.radius;
  const double k = std::sqrt(std::abs(lambda));
  const double x = k * R;
  if (problem.alpha.is_dirichlet()) {
    // phi(R) with phi(0) = 1, divided by cosh(kR) when lambda < 0
    if (lambda == 0.0) return 1.0;
    if (lambda < 0.0) return std::tanh(x) / x;
    return std::sin(x) / x;
  }
  const double a = problem.alpha.alpha();
  if (lambda == 0.0) return a;
  if (lambda < 0.0) return (x - (1.0 - a * R) * std::tanh(x)) / (k * R * R);
  return (x * std::cos(x) - (1.0 - a * R) * std::sin(x)) / (k * R * R);
}

double secular_residual_n3(const RadialShellProblem& problem, double lambda) {
  problem.validate();
  if (problem.dimension != 3) throw UnsupportedError("closed-form radial residual is only available for n = 3");
  const double R1 = problem.inner_radius;
  const double R2 = problem.outer_radius;
  const double gap = R2 - R1;
  // y(r) = sinh(k(r-R1))/k + R1 cosh(k(r-R1)), so phi(R1) = 1 and phi'(R1) = 0;
  // trigonometric for lambda > 0, y = r for lambda = 0.
  double y = 0.0;
  double dy = 0.0;
  if (lambda == 0.0) {
    y = R2;
    dy = 1.0;
  } else if (lambda < 0.0) {
    const double k = std::sqrt(-lambda);
    const double t = std::tanh(k * gap);  // everything divided by cosh(k gap)
    y = t / k + R1;
    dy = 1.0 + R1 * k * t;
  } else {
    const double k = std::sqrt(lambda);
    y = std::sin(k * gap) / k + R1 * std::cos(k * gap);
    dy = std::cos(k * gap) - R1 * k * std::sin(k * gap);
  }
  if (problem.alpha.is_dirichlet()) return y / R2;
  const double a = problem.alpha.alpha();
  // phi' + a phi = (R2 y' - (1 - a R2) y) / R2^2
  return (R2 * dy - (1.0 - a * R2) * y) / (R2 * R2);
}

namespace {

using State = std::array<double, 2>;  // (phi, r^{n-1} phi')

double shoot_residual(int n, double start, double phi0, double flux0, double outer, const BoundaryParameter& alpha,
                      double lambda) {
  namespace odeint = boost::numeric::odeint;
  auto rhs = [n, lambda](const State& s, State& ds, double r) {
    const double w = weight(n, r);
    ds[0] = s[1] / w;
    ds[1] = -lambda * w * s[0];
  };
  State s{phi0, flux0};
  auto stepper = odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(stepper, rhs, s, start, outer, (outer - start) * 1e-3);
  if (alpha.is_dirichlet()) return s[0];
  return s[1] / weight(n, outer) + alpha.alpha() * s[0];
}

double bisect_root(auto&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw NumericalError("shooting: bracket does not change sign");
  auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol * std::max(1.0, std::abs(a)); };
  auto [a, b] = boost::math::tools::bisect(f, lo, hi, stop);
  return 0.5 * (a + b);
}

}  // namespace

double shoot_eigenvalue(const RadialBallProblem& problem, double lo, double hi, double tol) {
  problem.validate();
  const int n = problem.dimension;
  const double R = problem.radius;
  auto f = [&](double lambda) {
    // regular series start: phi = 1 - lambda r^2 / (2n)
    const double r0 = 1e-6 * R;
    const double phi0 = 1.0 - lambda * r0 * r0 / (2.0 * n);
    const double flux0 = weight(n, r0) * (-lambda * r0 / n);
    return shoot_residual(n, r0, phi0, flux0, R, problem.alpha, lambda);
  };
  return bisect_root(f, lo, hi, tol);
}

double shoot_eigenvalue(const RadialShellProblem& problem, double lo, double hi, double tol) {
  problem.validate();
  auto f = [&](double lambda) {
    return shoot_residual(problem.dimension, problem.inner_radius, 1.0, 0.0, problem.outer_radius, problem.alpha,
                          lambda);
  };
  return bisect_root(f, lo, hi, tol);
}

ComparisonVerdict check_comparison(int dimension, double inner_radius, double outer_radius,
                                   const BoundaryParameter& alpha, double tol) {
  const double solver_tol = std::min(1e-10, tol);
  ComparisonVerdict v;
  v.mu1 = solve_shell({dimension, inner_radius, outer_radius, alpha}, solver_tol).eigenvalue;
  v.lambda1 = solve_ball({dimension, outer_radius, alpha}, solver_tol).eigenvalue;
  v.margin = v.lambda1 - v.mu1;
  v.holds = v.margin >= -tol;
  v.asserted = alpha.is_nonpositive();
  return v;
}

}  // namespace robin
