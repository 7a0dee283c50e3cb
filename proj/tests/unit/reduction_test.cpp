#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "robin/radial.hpp"
#include "robin/reduction.hpp"

namespace robin {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ShellRadii, BallGivesZeroInnerRadius) {
  const ReducedShell s = shell_radii_3d(4 * kPi, 4 * kPi / 3);
  EXPECT_EQ(s.inner_radius, 0.0);
  EXPECT_NEAR(s.outer_radius, 1.0, 1e-15);
  EXPECT_EQ(shell_radii_nd(2, 2 * kPi, kPi).inner_radius, 0.0);
  const ReducedShell s4 = shell_radii_nd(4, 2 * kPi * kPi * 8, kPi * kPi / 2 * 16);
  EXPECT_EQ(s4.inner_radius, 0.0);
  EXPECT_NEAR(s4.outer_radius, 2.0, 1e-14);
}

TEST(ShellRadii, KnownShell) {
  // shell 0.5 < r < 1
  const double v = 4 * kPi / 3 * (1 - 0.125);
  const ReducedShell s = shell_radii_3d(4 * kPi, v);
  EXPECT_NEAR(s.inner_radius, 0.5, 1e-14);
  EXPECT_NEAR(s.outer_radius, 1.0, 1e-15);
}

TEST(ShellRadii, PreservesAreaAndVolume) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> radius(0.1, 5.0), frac(0.01, 0.99);
  for (int trial = 0; trial < 200; ++trial) {
    const double r2 = radius(rng);
    const double area = 4 * kPi * r2 * r2;
    const double volume = frac(rng) * 4 * kPi / 3 * r2 * r2 * r2;
    const ReducedShell s = shell_radii_3d(area, volume);
    EXPECT_NEAR(s.outer_area(), area, 1e-10 * area);
    EXPECT_NEAR(s.shell_volume(), volume, 1e-10 * area * r2);
    const ReducedShell g = shell_radii_nd(3, area, volume);
    EXPECT_NEAR(g.inner_radius, s.inner_radius, 1e-10 * r2);
    EXPECT_NEAR(g.outer_radius, s.outer_radius, 1e-12 * r2);
  }
  for (int n : {2, 4, 5, 7}) {
    const double a = unit_sphere_area(n) * 1.7;
    const ReducedShell s = shell_radii_nd(n, a, 0.4 * unit_ball_volume(n));
    EXPECT_EQ(s.dimension, n);
    EXPECT_NEAR(s.outer_area(), a, 1e-10 * a);
    EXPECT_NEAR(s.shell_volume(), 0.4 * unit_ball_volume(n), 1e-10);
  }
}

TEST(ShellRadii, InnerRadiusDecreasesWithVolume) {
  double previous = 2.0;
  for (double f = 0.05; f < 1.0; f += 0.05) {
    const double r1 = shell_radii_3d(4 * kPi, f * 4 * kPi / 3).inner_radius;
    EXPECT_LT(r1, previous);
    previous = r1;
  }
}

TEST(ShellRadii, IsoperimetricViolationThrows) {
  EXPECT_THROW(shell_radii_3d(4 * kPi, 4 * kPi / 3 * 1.01), std::domain_error);
  EXPECT_THROW(shell_radii_nd(4, 1.0, 10.0), std::domain_error);
  EXPECT_THROW(shell_radii_nd(1, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(shell_radii_3d(-1.0, 0.1), std::invalid_argument);
}

TEST(RtMap, BallIsTheIdentityDistance) {
  const ParallelProfile pp = parallel_profile(RevolutionProfile::sphere(1.0), 41);
  const RtMap map = r_of_t(pp, 3, 4 * kPi);
  ASSERT_EQ(map.r.size(), 41u);
  for (std::size_t k = 0; k < map.r.size(); ++k) {
    EXPECT_NEAR(map.r[k], 1.0 - map.t_grid[k], 1e-10);
    if (!std::isnan(map.rprime[k])) EXPECT_NEAR(map.rprime[k], -1.0, 1e-8);
  }
  EXPECT_NEAR(map.max_abs_rprime, 1.0, 1e-8);
}

TEST(RtMap, StartsWithUnitSpeed) {
  const RevolutionProfile p = RevolutionProfile::torus(1.0, 0.3);
  const ParallelProfile pp = parallel_profile(p, 31);
  const RtMap map = r_of_t(pp, 3, summarize(p).area);
  EXPECT_NEAR(map.rprime.front(), -1.0, 1e-12);
  for (std::size_t k = 1; k < map.r.size(); ++k) EXPECT_LT(map.r[k], map.r[k - 1]);
}

TEST(RtMap, SpheroidCertificate) {
  const RevolutionProfile p = RevolutionProfile::spheroid(0.8, 1.0);
  const ParallelProfile pp = parallel_profile(p, 61);
  const RtMap map = r_of_t(pp, 3, summarize(p).area);
  EXPECT_LE(map.max_abs_rprime, 1.0 + 1e-3);
  EXPECT_GT(map.degenerate_points, -1);
}

TEST(Transport, BallQuotientsAgree) {
  const RevolutionProfile p = RevolutionProfile::sphere(1.0);
  const ParallelProfile pp = parallel_profile(p, 401);
  const RtMap map = r_of_t(pp, 3, 4 * kPi);
  const ReducedShell shell = shell_radii_3d(4 * kPi, 4 * kPi / 3);
  const auto a = BoundaryParameter::robin(-1);
  const TransportedQuotient q = transported_quotient(
      pp, map, shell, a, [](double r) { return 1 + r * r; }, [](double r) { return 2 * r; });
  EXPECT_NEAR(q.domain, q.shell, 1e-4 * std::abs(q.shell));
}

TEST(Transport, DomainQuotientBelowShellQuotient) {
  const RevolutionProfile p = RevolutionProfile::spheroid(0.8, 1.0);
  const GeometrySummary g = summarize(p);
  const ParallelProfile pp = parallel_profile(p, 201);
  const RtMap map = r_of_t(pp, 3, g.area);
  const ReducedShell shell = shell_radii_3d(g.area, g.volume);
  const auto a = BoundaryParameter::robin(-1);
  struct Trial {
    std::function<double(double)> psi, dpsi;
  };
  const std::vector<Trial> trials = {
      {[](double) { return 1.0; }, [](double) { return 0.0; }},
      {[](double r) { return r * r; }, [](double r) { return 2 * r; }},
      {[](double r) { return std::exp(r); }, [](double r) { return std::exp(r); }},
  };
  for (const Trial& t : trials) {
    const TransportedQuotient q = transported_quotient(pp, map, shell, a, t.psi, t.dpsi);
    EXPECT_LE(q.domain, q.shell + 1e-3 * std::abs(q.shell));
  }
  // the constant has no gradient, so both sides reduce to alpha |boundary| / volume
  const TransportedQuotient c = transported_quotient(pp, map, shell, a, trials[0].psi, trials[0].dpsi);
  EXPECT_NEAR(c.shell, -g.area / g.volume, 1e-8);
  EXPECT_NEAR(c.domain, -g.area / g.volume, 1e-3);
  EXPECT_THROW(transported_quotient(pp, map, shell, BoundaryParameter::dirichlet(), trials[0].psi, trials[0].dpsi),
               std::invalid_argument);
}

TEST(Conditions, FrozenValues) {
  const ConditionValue e = ellipsoid_condition(0.1);
  EXPECT_NEAR(e.lhs, 0.160975621938850778, 1e-12);
  EXPECT_NEAR(e.rhs, 0.08, 1e-15);
  EXPECT_TRUE(e.holds);
  EXPECT_FALSE(ellipsoid_condition(0.5).holds);
  EXPECT_TRUE(ellipsoid_condition(1.0).holds);
  EXPECT_NEAR(torus_condition_threshold(), 0.392641024380554218, 1e-10);
  EXPECT_TRUE(torus_condition(0.3).holds);
  EXPECT_FALSE(torus_condition(0.45).holds);
  EXPECT_THROW(ellipsoid_condition(0.0), std::invalid_argument);
  EXPECT_THROW(torus_condition(0.6), std::invalid_argument);
}

TEST(Conditions, EllipsoidScan) {
  const auto intervals = ellipsoid_condition_scan();
  ASSERT_FALSE(intervals.empty());
  EXPECT_LT(intervals.front().first, 1e-3);
  EXPECT_NEAR(intervals.front().second, 0.220285, 1e-5);
}

class Chain : public ::testing::Test {
 protected:
  static ChainOptions options() {
    ChainOptions o;
    o.tol = 1e-10;
    return o;
  }
};

TEST_F(Chain, BallMarginsVanish) {
  const BoundChainReport r = bound_chain(RevolutionProfile::sphere(1.0), BoundaryParameter::robin(-1), options());
  EXPECT_EQ(r.shell.inner_radius, 0.0);
  EXPECT_NEAR(r.margin_shell_ball, 0.0, 1e-12);
  EXPECT_NEAR(r.margin_domain_shell, 0.0, 1e-3);
  EXPECT_TRUE(r.admissible);
  EXPECT_TRUE(r.asserted_hold());
}

TEST_F(Chain, SpheroidHolds) {
  const BoundChainReport r =
      bound_chain(RevolutionProfile::spheroid(0.8, 1.0), BoundaryParameter::robin(-1), options());
  EXPECT_EQ(r.route, AdmissibilityRoute::ConvexOrAxiconvex);
  EXPECT_TRUE(r.assert_domain_shell);
  EXPECT_TRUE(r.assert_shell_ball);
  ASSERT_TRUE(r.lambda1_direct.has_value());
  EXPECT_LE(*r.lambda1_direct, r.mu1_shell);
  EXPECT_LE(r.mu1_shell, r.lambda1_ball);
  EXPECT_TRUE(r.asserted_hold());
}

TEST_F(Chain, DirichletShellBallIsNotAsserted) {
  ChainOptions o = options();
  o.direct = false;
  const BoundChainReport r = bound_chain(RevolutionProfile::spheroid(0.8, 1.0), BoundaryParameter::dirichlet(), o);
  EXPECT_FALSE(r.assert_shell_ball);
  EXPECT_FALSE(r.assert_domain_shell);
  EXPECT_FALSE(r.lambda1_direct.has_value());
  EXPECT_TRUE(std::isnan(r.margin_domain_shell));
}

TEST_F(Chain, PositiveAlphaShellBallIsNotAsserted) {
  ChainOptions o = options();
  o.direct = false;
  const BoundChainReport r = bound_chain(RevolutionProfile::spheroid(0.8, 1.0), BoundaryParameter::robin(1), o);
  EXPECT_FALSE(r.assert_shell_ball);
}

TEST_F(Chain, FatTorusIsInadmissible) {
  ChainOptions o = options();
  o.direct = false;
  const BoundChainReport r = bound_chain(RevolutionProfile::torus(1.0, 0.3), BoundaryParameter::robin(-1), o);
  EXPECT_EQ(r.route, AdmissibilityRoute::None);
  EXPECT_FALSE(r.admissible);
  EXPECT_FALSE(r.assert_domain_shell);
  EXPECT_TRUE(r.assert_shell_ball);
  EXPECT_TRUE(r.holds_shell_ball);
}

TEST_F(Chain, ThinTorusUsesMeanCurvature) {
  ChainOptions o = options();
  o.direct = false;
  const BoundChainReport r = bound_chain(RevolutionProfile::torus(1.0, 0.15), BoundaryParameter::robin(-1), o);
  EXPECT_EQ(r.route, AdmissibilityRoute::MeanCurvature);
  EXPECT_TRUE(r.admissible);
  EXPECT_TRUE(r.mean.holds);
  EXPECT_EQ(to_string(r.route), "mean-curvature");
}

TEST_F(Chain, CertificateIsReported) {
  ChainOptions o = options();
  o.direct = false;
  o.certificate = true;
  o.certificate_points = 41;
  const BoundChainReport r = bound_chain(RevolutionProfile::spheroid(0.6, 1.0), BoundaryParameter::robin(-1), o);
  ASSERT_TRUE(r.max_abs_rprime.has_value());
  EXPECT_LE(*r.max_abs_rprime, 1.0 + 1e-3);
}

}  // namespace
}  // namespace robin
