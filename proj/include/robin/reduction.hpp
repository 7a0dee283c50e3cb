#pragma once

// Parallel-coordinate reduction of a domain to a comparison spherical shell.
//
// A domain with boundary area A and volume V is compared with the shell
// A_{R1,R2} that has the same outer surface area and the same volume. The map
// t -> r(t) sends the inner parallel sets Omega_t to concentric shells of the
// same volume; if |r'| <= 1 the transported test functions show
// lambda_1(Omega) <= mu_1(A_{R1,R2}).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "robin/axisym.hpp"
#include "robin/boundary.hpp"
#include "robin/geometry.hpp"
#include "robin/profile.hpp"

namespace robin {

struct ReducedShell {
  int dimension = 3;
  double inner_radius = 0.0;  // R1, 0 exactly at isoperimetric equality
  double outer_radius = 0.0;  // R2

  double shell_volume() const;
  double outer_area() const;
};

/// R1 = cbrt(A^{3/2} - 6 sqrt(pi) V) / (2 sqrt(pi)), R2 = sqrt(A / (4 pi)).
/// A deficit within rounding of zero gives R1 = 0; a real isoperimetric
/// violation throws std::domain_error.
ReducedShell shell_radii_3d(double area, double volume);
/// General dimension n >= 2 with the unit-sphere measure 2 pi^{n/2} / Gamma(n/2).
ReducedShell shell_radii_nd(int n, double area, double volume);

struct RtMap {
  std::vector<double> t_grid;
  std::vector<double> r;       // r(t)
  std::vector<double> rprime;  // r'(t) from the area / volume quotient; NaN on the degenerate tail
  double max_abs_rprime = 0.0;  // over the non-degenerate samples
  double argmax_t = 0.0;
  int degenerate_points = 0;  // samples where the quotient denominator vanishes
};

/// Samples r(t) and r'(t) = -Area(dOmega_t) / D(t)^{(n-1)/n} with
/// D(t) = A^{n/(n-1)} - Vol(Omega_t) n^{n/(n-1)} omega_n^{1/(n-1)}.
RtMap r_of_t(const ParallelProfile& pp, int n, double area);

/// Quotients of one radial trial function psi on [R1, R2].
struct TransportedQuotient {
  /// Rayleigh quotient of u = psi(r(dist(x, boundary))) on the domain, from
  /// the parallel-set integrals.
  double domain = 0.0;
  /// Shell quotient of psi with the Neumann inner / Robin outer form.
  double shell = 0.0;
};

/// Evaluates both quotients of a trial function psi (with derivative dpsi).
/// Finite alpha only: the Dirichlet form needs psi(R2) = 0.
TransportedQuotient transported_quotient(const ParallelProfile& pp, const RtMap& map, const ReducedShell& shell,
                                         const BoundaryParameter& alpha, const std::function<double(double)>& psi,
                                         const std::function<double(double)>& dpsi);

enum class AdmissibilityRoute { ConvexOrAxiconvex, MeanCurvature, None };

std::string to_string(AdmissibilityRoute route);

struct ChainOptions {
  /// Compute lambda_1(Omega) with the axisymmetric finite-element solver.
  bool direct = true;
  /// Coarsest mesh size for the direct solver; 0 picks inner_radius / 20.
  double mesh_h = 0.0;
  /// Radial solver tolerance.
  double tol = 1e-10;
  /// Tolerance for the asserted mu_1 <= lambda_1(B) inequality.
  double comparison_tol = 1e-9;
  /// Also sample the parallel sets and report max |r'(t)|.
  bool certificate = false;
  int certificate_points = 101;
  SamplingPlan sampling;
};

struct BoundChainReport {
  std::string domain;
  BoundaryParameter alpha = BoundaryParameter::neumann();
  GeometrySummary geometry;
  ReducedShell shell;
  std::optional<DiscreteEigenResult> direct;
  std::optional<double> lambda1_direct;
  double mu1_shell = 0.0;
  double lambda1_ball = 0.0;
  /// mu1_shell - lambda1_direct (lambda(Omega) <= mu(shell)); NaN without a direct value.
  double margin_domain_shell = 0.0;
  /// lambda1_ball - mu1_shell (mu(shell) <= lambda(ball)).
  double margin_shell_ball = 0.0;
  double tolerance_domain_shell = 0.0;  // the direct solver's extrapolation error
  double tolerance_shell_ball = 0.0;
  AdmissibilityRoute route = AdmissibilityRoute::None;
  bool admissible = false;
  bool assert_domain_shell = false;
  bool assert_shell_ball = false;
  bool holds_domain_shell = true;
  bool holds_shell_ball = true;
  std::optional<double> max_abs_rprime;
  MeanConditionReport mean;

  /// True unless an asserted inequality is violated.
  bool asserted_hold() const {
    return (!assert_domain_shell || holds_domain_shell) && (!assert_shell_ball || holds_shell_ball);
  }
};

/// Runs the comparison chain lambda_1(Omega) <= mu_1(A_{R1,R2}) <= lambda_1(B_{R2})
/// for an axisymmetric domain in R^3.
BoundChainReport bound_chain(const RevolutionProfile& profile, const BoundaryParameter& alpha,
                             const ChainOptions& opts = {});

struct ConditionValue {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Prolate spheroid a = m c: m (1+m^2)^2 (m + arcsin(sqrt(1-m^2)) / sqrt(1-m^2)) >= 8 m^2.
ConditionValue ellipsoid_condition(double m);
/// Torus r = m R: (1 - 2m)^2 pi >= (1 - m)^2 m.
ConditionValue torus_condition(double m);
/// Root of the torus condition in (0, 1/2), by bisection to `tol`.
double torus_condition_threshold(double tol = 1e-12);

/// Intervals of (0, 1) where the ellipsoid condition holds, from a scan with
/// `samples` points and bisection at every sign change.
std::vector<std::pair<double, double>> ellipsoid_condition_scan(int samples = 2000, double tol = 1e-12);

}  // namespace robin
