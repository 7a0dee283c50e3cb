#include "robin/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "robin/errors.hpp"

namespace robin {

namespace {

constexpr double kPi = std::numbers::pi;

// Cyclic tridiagonal solve (Sherman-Morrison) for diag b, sub a, super c with
// corner entries a[0] (row 0, col m-1) and c[m-1] (row m-1, col 0).
std::vector<double> solve_cyclic(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                                 const std::vector<double>& rhs) {
  const std::size_t m = b.size();
  auto thomas = [m](const std::vector<double>& lo, const std::vector<double>& di, const std::vector<double>& up,
                    std::vector<double> r) {
    std::vector<double> cp(m), x(m);
    double denom = di[0];
    cp[0] = up[0] / denom;
    r[0] /= denom;
    for (std::size_t i = 1; i < m; ++i) {
      denom = di[i] - lo[i] * cp[i - 1];
      cp[i] = up[i] / denom;
      r[i] = (r[i] - lo[i] * r[i - 1]) / denom;
    }
    x[m - 1] = r[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) x[i] = r[i] - cp[i] * x[i + 1];
    return x;
  };
  const double alpha = c[m - 1];  // bottom-left
  const double beta = a[0];       // top-right
  const double gamma = -b[0];
  b[0] -= gamma;
  b[m - 1] -= alpha * beta / gamma;
  std::vector<double> x = thomas(a, b, c, rhs);
  std::vector<double> u(m, 0.0);
  u[0] = gamma;
  u[m - 1] = alpha;
  std::vector<double> z = thomas(a, b, c, u);
  const double fact = (x[0] + beta * x[m - 1] / gamma) / (1.0 + z[0] + beta * z[m - 1] / gamma);
  for (std::size_t i = 0; i < m; ++i) x[i] -= fact * z[i];
  return x;
}

double signed_area(const std::vector<Point2>& poly) {
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    area += p[0] * q[1] - q[0] * p[1];
  }
  return 0.5 * area;
}

}  // namespace

PeriodicSpline::PeriodicSpline(const std::vector<Point2>& points) {
  const std::size_t m = points.size();
  if (m < 4) throw GeometryError("sampled profile needs at least 4 distinct points");
  knots_.resize(m + 1);
  values_ = points;
  knots_[0] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = points[i];
    const Point2& q = points[(i + 1) % m];
    const double len = std::hypot(q[0] - p[0], q[1] - p[1]);
    if (!(len > 0.0)) throw GeometryError("sampled profile has repeated consecutive points");
    knots_[i + 1] = knots_[i] + len;
  }
  period_ = knots_[m];

  std::vector<double> lo(m), di(m), up(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double hp = knots_[i == 0 ? m : i] - knots_[i == 0 ? m - 1 : i - 1];  // interval before i
    const double hn = knots_[i + 1] - knots_[i];                                // interval after i
    lo[i] = hp / 6.0;
    di[i] = (hp + hn) / 3.0;
    up[i] = hn / 6.0;
  }
  second_.assign(m, {0.0, 0.0});
  for (int d = 0; d < 2; ++d) {
    std::vector<double> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t prev = (i + m - 1) % m;
      const std::size_t next = (i + 1) % m;
      const double hp = knots_[i == 0 ? m : i] - knots_[i == 0 ? m - 1 : i - 1];
      const double hn = knots_[i + 1] - knots_[i];
      rhs[i] = (values_[next][d] - values_[i][d]) / hn - (values_[i][d] - values_[prev][d]) / hp;
    }
    const std::vector<double> sol = solve_cyclic(lo, di, up, rhs);
    for (std::size_t i = 0; i < m; ++i) second_[i][d] = sol[i];
  }
}

CurvePoint PeriodicSpline::eval(double tau) const {
  tau = std::fmod(tau, period_);
  if (tau < 0.0) tau += period_;
  const std::size_t m = values_.size();
  std::size_t i = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), tau) - knots_.begin());
  i = std::clamp<std::size_t>(i, 1, m) - 1;
  const std::size_t j = (i + 1) % m;
  const double h = knots_[i + 1] - knots_[i];
  const double A = (knots_[i + 1] - tau) / h;
  const double B = 1.0 - A;
  double out[2][3];
  for (int d = 0; d < 2; ++d) {
    const double y0 = values_[i][d], y1 = values_[j][d];
    const double m0 = second_[i][d], m1 = second_[j][d];
    out[d][0] = A * y0 + B * y1 + ((A * A * A - A) * m0 + (B * B * B - B) * m1) * h * h / 6.0;
    out[d][1] = (y1 - y0) / h - (3.0 * A * A - 1.0) / 6.0 * h * m0 + (3.0 * B * B - 1.0) / 6.0 * h * m1;
    out[d][2] = A * m0 + B * m1;
  }
  return {out[0][0], out[1][0], out[0][1], out[1][1], out[0][2], out[1][2]};
}

RevolutionProfile RevolutionProfile::sphere(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("sphere radius must be positive");
  RevolutionProfile p;
  p.family_ = Family::Sphere;
  p.topology_ = Topology::SphereLike;
  p.params_ = {radius};
  return p;
}

RevolutionProfile RevolutionProfile::spheroid(double a, double c) {
  if (!(a > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(c))
    throw std::invalid_argument("spheroid semi-axes must be positive");
  RevolutionProfile p;
  p.family_ = Family::Spheroid;
  p.topology_ = Topology::SphereLike;
  p.params_ = {a, c};
  return p;
}

RevolutionProfile RevolutionProfile::torus(double major, double minor) {
  if (!(minor > 0.0) || !(major > minor) || !std::isfinite(major))
    throw std::invalid_argument("torus radii must satisfy 0 < r < R");
  RevolutionProfile p;
  p.family_ = Family::Torus;
  p.topology_ = Topology::TorusLike;
  p.params_ = {major, minor};
  return p;
}

RevolutionProfile RevolutionProfile::sampled(std::vector<Point2> samples, Topology topology) {
  RevolutionProfile p;
  p.family_ = Family::Sampled;
  p.topology_ = topology;
  for (const Point2& q : samples)
    if (!std::isfinite(q[0]) || !std::isfinite(q[1])) throw GeometryError("sampled profile has non-finite points");

  std::vector<Point2> closed;
  if (topology == Topology::SphereLike) {
    if (samples.size() < 3) throw GeometryError("sphere-like profile needs at least 3 samples");
    const double scale = std::max(std::abs(samples.front()[1] - samples.back()[1]), 1e-300);
    if (std::abs(samples.front()[0]) > 1e-12 * scale || std::abs(samples.back()[0]) > 1e-12 * scale)
      throw GeometryError("sphere-like profile must start and end on the axis (s = 0)");
    samples.front()[0] = 0.0;
    samples.back()[0] = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
      if (!(samples[i][0] > 0.0)) throw GeometryError("interior samples of a sphere-like profile need s > 0");
    // Region = samples + axis segment; counter-clockwise means the first point is the lower one.
    if (signed_area(samples) < 0.0) std::reverse(samples.begin(), samples.end());
    closed = samples;
    for (std::size_t i = samples.size() - 1; i-- > 1;) closed.push_back({-samples[i][0], samples[i][1]});
    p.spline_ = std::make_shared<PeriodicSpline>(closed);
    // arc-length parameter of the original half
    double half = 0.0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
      half += std::hypot(samples[i + 1][0] - samples[i][0], samples[i + 1][1] - samples[i][1]);
    p.spline_span_ = half;
  } else {
    if (samples.size() < 4) throw GeometryError("torus-like profile needs at least 4 samples");
    for (const Point2& q : samples)
      if (!(q[0] > 0.0)) throw GeometryError("torus-like profile must stay off the axis (s > 0)");
    if (signed_area(samples) < 0.0) std::reverse(samples.begin(), samples.end());
    p.spline_ = std::make_shared<PeriodicSpline>(samples);
    p.spline_span_ = p.spline_->period();
  }
  return p;
}

CurvePoint RevolutionProfile::eval(double u) const {
  switch (family_) {
    case Family::Sphere:
    case Family::Spheroid: {
      const double a = params_[0];
      const double c = family_ == Family::Sphere ? params_[0] : params_[1];
      const double phi = kPi * u;
      const double sn = std::sin(phi), cs = std::cos(phi);
      return {a * sn, -c * cs, kPi * a * cs, kPi * c * sn, -kPi * kPi * a * sn, kPi * kPi * c * cs};
    }
    case Family::Torus: {
      const double R = params_[0], r = params_[1];
      const double th = 2.0 * kPi * u;
      const double w = 2.0 * kPi;
      const double sn = std::sin(th), cs = std::cos(th);
      return {R + r * cs, r * sn, -w * r * sn, w * r * cs, -w * w * r * cs, -w * w * r * sn};
    }
    case Family::Sampled: {
      const double L = spline_span_;
      CurvePoint q = spline_->eval(u * L);
      q.ds *= L;
      q.dz *= L;
      q.dds *= L * L;
      q.ddz *= L * L;
      return q;
    }
  }
  throw std::logic_error("unknown profile family");
}

std::string RevolutionProfile::describe() const {
  std::ostringstream out;
  out.precision(12);
  switch (family_) {
    case Family::Sphere: out << "sphere(radius=" << params_[0] << ")"; break;
    case Family::Spheroid: out << "spheroid(a=" << params_[0] << ", c=" << params_[1] << ")"; break;
    case Family::Torus: out << "torus(R=" << params_[0] << ", r=" << params_[1] << ")"; break;
    case Family::Sampled:
      out << "sampled(" << (topology_ == Topology::SphereLike ? "sphere-like" : "torus-like") << ")";
      break;
  }
  return out.str();
}

std::vector<Point2> RevolutionProfile::polyline(int segments) const {
  std::vector<Point2> pts(segments + 1);
  for (int k = 0; k <= segments; ++k) {
    const CurvePoint q = eval(static_cast<double>(k) / segments);
    pts[k] = {q.s, q.z};
  }
  return pts;
}

}  // namespace robin
