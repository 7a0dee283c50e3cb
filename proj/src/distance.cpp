#include "robin/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "robin/errors.hpp"

namespace robin {

namespace {

constexpr int kChunk = 32;

double box_distance2(const Point2& p, double lo_s, double hi_s, double lo_z, double hi_z) {
  const double ds = std::max({lo_s - p[0], 0.0, p[0] - hi_s});
  const double dz = std::max({lo_z - p[1], 0.0, p[1] - hi_z});
  return ds * ds + dz * dz;
}

}  // namespace

BoundaryDistance::BoundaryDistance(const RevolutionProfile& profile, int segments)
    : profile_(profile), segments_(segments) {
  if (segments < 16) throw std::invalid_argument("distance polyline needs at least 16 segments");
  vertices_ = profile_.polyline(segments_);
  s_max_ = 0.0;
  z_min_ = std::numeric_limits<double>::infinity();
  z_max_ = -z_min_;
  for (const Point2& v : vertices_) {
    s_max_ = std::max(s_max_, v[0]);
    z_min_ = std::min(z_min_, v[1]);
    z_max_ = std::max(z_max_, v[1]);
  }
  for (int first = 0; first < segments_; first += kChunk) {
    Chunk c;
    c.first = first;
    c.last = std::min(first + kChunk, segments_);
    c.lo_s = c.lo_z = std::numeric_limits<double>::infinity();
    c.hi_s = c.hi_z = -std::numeric_limits<double>::infinity();
    for (int k = c.first; k <= c.last; ++k) {
      c.lo_s = std::min(c.lo_s, vertices_[k][0]);
      c.hi_s = std::max(c.hi_s, vertices_[k][0]);
      c.lo_z = std::min(c.lo_z, vertices_[k][1]);
      c.hi_z = std::max(c.hi_z, vertices_[k][1]);
    }
    chunks_.push_back(c);
  }
}

NearestPoint BoundaryDistance::nearest(const Point2& p) const {
  // polyline search with chunk pruning
  double best2 = std::numeric_limits<double>::infinity();
  double best_u = 0.0;
  std::vector<std::pair<double, int>> order;
  order.reserve(chunks_.size());
  for (int c = 0; c < static_cast<int>(chunks_.size()); ++c) {
    const Chunk& ch = chunks_[c];
    order.emplace_back(box_distance2(p, ch.lo_s, ch.hi_s, ch.lo_z, ch.hi_z), c);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [lower, c] : order) {
    if (lower >= best2) break;
    const Chunk& ch = chunks_[c];
    for (int k = ch.first; k < ch.last; ++k) {
      const Point2& a = vertices_[k];
      const Point2& b = vertices_[k + 1];
      const double ex = b[0] - a[0], ez = b[1] - a[1];
      const double len2 = ex * ex + ez * ez;
      double f = len2 > 0.0 ? ((p[0] - a[0]) * ex + (p[1] - a[1]) * ez) / len2 : 0.0;
      f = std::clamp(f, 0.0, 1.0);
      const double qx = a[0] + f * ex - p[0], qz = a[1] + f * ez - p[1];
      const double d2 = qx * qx + qz * qz;
      if (d2 < best2) {
        best2 = d2;
        best_u = (k + f) / segments_;
      }
    }
  }

  // Newton on g(u) = |gamma(u) - p|^2 / 2, Brent when g'' is not positive
  // (points near a centre of curvature).
  const bool periodic = profile_.topology() == Topology::TorusLike;
  const double window = 1.0 / segments_;
  auto wrap = [&](double v) { return periodic ? v - std::floor(v) : std::clamp(v, 0.0, 1.0); };
  auto dist2 = [&](double v) {
    const CurvePoint q = profile_.eval(wrap(v));
    return (q.s - p[0]) * (q.s - p[0]) + (q.z - p[1]) * (q.z - p[1]);
  };
  // the chord distance is not a curve distance; start from the curve point
  double u = best_u;
  double refined2 = dist2(best_u);
  double refined_u = best_u;
  bool converged = false;
  for (int it = 0; it < 12; ++it) {
    const CurvePoint q = profile_.eval(u);
    const double rx = q.s - p[0], rz = q.z - p[1];
    const double g1 = rx * q.ds + rz * q.dz;
    const double g2 = q.ds * q.ds + q.dz * q.dz + rx * q.dds + rz * q.ddz;
    const double speed2 = q.ds * q.ds + q.dz * q.dz;
    if (!(g2 > 1e-3 * speed2)) break;
    const double next = wrap(u + std::clamp(-g1 / g2, -2.0 * window, 2.0 * window));
    const double d2 = dist2(next);
    if (d2 <= refined2) {
      refined2 = d2;
      refined_u = next;
    }
    if (std::abs(next - u) < 1e-14) {
      converged = true;
      break;
    }
    u = next;
  }
  if (!converged) {
    double lo = best_u - window, hi = best_u + window;
    if (!periodic) {
      lo = std::max(lo, 0.0);
      hi = std::min(hi, 1.0);
    }
    const auto [um, d2] = boost::math::tools::brent_find_minima(dist2, lo, hi, 40);
    if (d2 < refined2) {
      refined2 = d2;
      refined_u = wrap(um);
    }
  }

  NearestPoint out;
  out.u = refined_u;
  out.distance = std::sqrt(refined2);
  const CurvePoint q = profile_.eval(refined_u);
  // outward normal of a counter-clockwise curve is (z', -s')
  const double side = (p[0] - q.s) * q.dz - (p[1] - q.z) * q.ds;
  out.inside = side < 0.0;
  if (out.distance == 0.0) out.inside = true;
  return out;
}

SamplingGrid make_sampling_grid(const BoundaryDistance& dist, int resolution) {
  if (resolution < 4) throw std::invalid_argument("sampling resolution must be >= 4");
  const double half_height = 0.5 * (dist.z_max() - dist.z_min());
  const double extent = std::max(dist.s_max(), half_height);
  SamplingGrid g;
  g.h = extent / resolution;
  g.ns = static_cast<int>(std::ceil(dist.s_max() / g.h)) + 1;
  const int half = static_cast<int>(std::ceil(half_height / g.h)) + 1;
  g.nz = 2 * half;
  g.z0 = 0.5 * (dist.z_min() + dist.z_max()) - half * g.h;
  return g;
}

}  // namespace robin
