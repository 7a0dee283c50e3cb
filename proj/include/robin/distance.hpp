#pragma once

// Distance from points of the meridian half-plane to the profile curve.
//
// For an axisymmetric body the distance from (s, z, 0) to the boundary
// surface equals the planar distance from (s, z) to the meridian curve, so
// every parallel-set computation reduces to this 2D query. The symmetry axis
// is not part of the boundary.

#include <span>
#include <vector>

#include "robin/profile.hpp"

namespace robin {

struct NearestPoint {
  double u = 0.0;         // curve parameter of the foot point
  double distance = 0.0;  // >= 0
  bool inside = false;    // point lies in the meridian region
  double signed_distance() const { return inside ? distance : -distance; }
};

class BoundaryDistance {
 public:
  explicit BoundaryDistance(const RevolutionProfile& profile, int segments = 2048);

  /// Coarse polyline search followed by Newton refinement on the exact curve.
  NearestPoint nearest(const Point2& p) const;
  /// Positive inside the meridian region.
  double signed_distance(const Point2& p) const { return nearest(p).signed_distance(); }

  const RevolutionProfile& profile() const { return profile_; }
  double s_max() const { return s_max_; }
  double z_min() const { return z_min_; }
  double z_max() const { return z_max_; }

 private:
  struct Chunk {
    int first = 0, last = 0;  // segment range [first, last)
    double lo_s, hi_s, lo_z, hi_z;
  };

  RevolutionProfile profile_;
  int segments_;
  std::vector<Point2> vertices_;
  std::vector<Chunk> chunks_;
  double s_max_ = 0.0, z_min_ = 0.0, z_max_ = 0.0;
};

/// Uniform square-cell grid covering the meridian bounding box. Nodes are
/// (i h, z0 + j h) for i = 0..ns, j = 0..nz; z0 is chosen so that the
/// mid-height of the box is a grid line.
struct SamplingGrid {
  double z0 = 0.0;
  double h = 0.0;
  int ns = 0;
  int nz = 0;

  int node_count() const { return (ns + 1) * (nz + 1); }
  int index(int i, int j) const { return j * (ns + 1) + i; }
  Point2 node(int i, int j) const { return {i * h, z0 + j * h}; }
};

/// `resolution` cells along max(s_max, (z_max - z_min) / 2).
SamplingGrid make_sampling_grid(const BoundaryDistance& dist, int resolution);

namespace kernels {

/// Signed distance at every grid node; reference implementation.
void distance_field_serial(const BoundaryDistance& dist, const SamplingGrid& grid, std::span<double> out);
/// Same values computed with an OpenMP loop over grid rows.
void distance_field_omp(const BoundaryDistance& dist, const SamplingGrid& grid, std::span<double> out);

struct LevelSetMeasures {
  std::vector<double> volume;  // 2 pi integral of s over {0 < d < t}
  std::vector<double> area;    // 2 pi integral of s along {d = t}
};

/// Piecewise-linear interpolation of the field on the two triangles of each
/// cell; exact integrals of the linear weight s over the clipped pieces.
/// Row partial sums are combined in row order, so both variants agree bit for bit.
LevelSetMeasures level_set_measures_serial(const SamplingGrid& grid, std::span<const double> field,
                                           std::span<const double> t_grid);
LevelSetMeasures level_set_measures_omp(const SamplingGrid& grid, std::span<const double> field,
                                        std::span<const double> t_grid);

}  // namespace kernels

}  // namespace robin
