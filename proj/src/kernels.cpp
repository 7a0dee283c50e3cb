#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robin/distance.hpp"

namespace robin::kernels {

namespace {

struct Vertex {
  double s, z, f;
};

// Integral of s over a convex polygon (fan triangulation).
double polygon_moment(const Vertex* v, int count) {
  double total = 0.0;
  for (int k = 1; k + 1 < count; ++k) {
    const double ax = v[k].s - v[0].s, az = v[k].z - v[0].z;
    const double bx = v[k + 1].s - v[0].s, bz = v[k + 1].z - v[0].z;
    const double area = 0.5 * std::abs(ax * bz - az * bx);
    total += area * (v[0].s + v[k].s + v[k + 1].s) / 3.0;
  }
  return total;
}

// For the superlevel part {f >= tau} of one triangle: integral of s over it
// and of s along the cut {f = tau}.
void clip_triangle(const std::array<Vertex, 3>& tri, double tau, double& moment, double& contour) {
  Vertex poly[4];
  Vertex cut[2];
  int count = 0;
  int cuts = 0;
  for (int k = 0; k < 3; ++k) {
    const Vertex& a = tri[k];
    const Vertex& b = tri[(k + 1) % 3];
    const double fa = a.f - tau, fb = b.f - tau;
    if (fa >= 0.0) poly[count++] = a;
    if ((fa >= 0.0) != (fb >= 0.0)) {
      const double w = fa / (fa - fb);
      const Vertex x{a.s + w * (b.s - a.s), a.z + w * (b.z - a.z), tau};
      poly[count++] = x;
      if (cuts < 2) cut[cuts++] = x;
    }
  }
  moment = count >= 3 ? polygon_moment(poly, count) : 0.0;
  contour = 0.0;
  if (cuts == 2) {
    const double len = std::hypot(cut[1].s - cut[0].s, cut[1].z - cut[0].z);
    contour = len * 0.5 * (cut[0].s + cut[1].s);
  }
}

// Accumulates one grid row of cells into (moment at 0, moment at t_k, contour at t_k).
void accumulate_row(const SamplingGrid& grid, std::span<const double> field, std::span<const double> t_grid, int j,
                    double* base_moment, double* moment, double* contour) {
  const int nt = static_cast<int>(t_grid.size());
  for (int i = 0; i < grid.ns; ++i) {
    const Point2 p00 = grid.node(i, j), p11 = grid.node(i + 1, j + 1);
    const Vertex v00{p00[0], p00[1], field[grid.index(i, j)]};
    const Vertex v10{p11[0], p00[1], field[grid.index(i + 1, j)]};
    const Vertex v01{p00[0], p11[1], field[grid.index(i, j + 1)]};
    const Vertex v11{p11[0], p11[1], field[grid.index(i + 1, j + 1)]};
    const std::array<std::array<Vertex, 3>, 2> tris{{{v00, v10, v11}, {v00, v11, v01}}};
    for (const auto& tri : tris) {
      const double fmax = std::max({tri[0].f, tri[1].f, tri[2].f});
      if (fmax <= 0.0) continue;
      double m = 0.0, c = 0.0;
      clip_triangle(tri, 0.0, m, c);
      *base_moment += m;
      for (int k = 0; k < nt; ++k) {
        const double tau = t_grid[k];
        if (fmax <= tau) break;
        clip_triangle(tri, tau, m, c);
        moment[k] += m;
        contour[k] += c;
      }
    }
  }
}

LevelSetMeasures combine_rows(const std::vector<double>& base, const std::vector<double>& rows_moment,
                              const std::vector<double>& rows_contour, int rows, int nt) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double base_total = 0.0;
  for (int j = 0; j < rows; ++j) base_total += base[j];
  LevelSetMeasures out;
  out.volume.assign(nt, 0.0);
  out.area.assign(nt, 0.0);
  for (int k = 0; k < nt; ++k) {
    double m = 0.0, c = 0.0;
    for (int j = 0; j < rows; ++j) {
      m += rows_moment[static_cast<std::size_t>(j) * nt + k];
      c += rows_contour[static_cast<std::size_t>(j) * nt + k];
    }
    out.volume[k] = two_pi * (base_total - m);
    out.area[k] = two_pi * c;
  }
  return out;
}

void check_sizes(const SamplingGrid& grid, std::size_t field_size) {
  if (field_size != static_cast<std::size_t>(grid.node_count()))
    throw std::invalid_argument("field size does not match the sampling grid");
}

}  // namespace

void distance_field_serial(const BoundaryDistance& dist, const SamplingGrid& grid, std::span<double> out) {
  check_sizes(grid, out.size());
  for (int j = 0; j <= grid.nz; ++j)
    for (int i = 0; i <= grid.ns; ++i) out[grid.index(i, j)] = dist.signed_distance(grid.node(i, j));
}

void distance_field_omp(const BoundaryDistance& dist, const SamplingGrid& grid, std::span<double> out) {
  check_sizes(grid, out.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (int j = 0; j <= grid.nz; ++j)
    for (int i = 0; i <= grid.ns; ++i) out[grid.index(i, j)] = dist.signed_distance(grid.node(i, j));
}

LevelSetMeasures level_set_measures_serial(const SamplingGrid& grid, std::span<const double> field,
                                           std::span<const double> t_grid) {
  check_sizes(grid, field.size());
  const int rows = grid.nz;
  const int nt = static_cast<int>(t_grid.size());
  std::vector<double> base(rows, 0.0);
  std::vector<double> moment(static_cast<std::size_t>(rows) * nt, 0.0);
  std::vector<double> contour(static_cast<std::size_t>(rows) * nt, 0.0);
  for (int j = 0; j < rows; ++j)
    accumulate_row(grid, field, t_grid, j, &base[j], &moment[static_cast<std::size_t>(j) * nt],
                   &contour[static_cast<std::size_t>(j) * nt]);
  return combine_rows(base, moment, contour, rows, nt);
}

LevelSetMeasures level_set_measures_omp(const SamplingGrid& grid, std::span<const double> field,
                                        std::span<const double> t_grid) {
  check_sizes(grid, field.size());
  const int rows = grid.nz;
  const int nt = static_cast<int>(t_grid.size());
  std::vector<double> base(rows, 0.0);
  std::vector<double> moment(static_cast<std::size_t>(rows) * nt, 0.0);
  std::vector<double> contour(static_cast<std::size_t>(rows) * nt, 0.0);
#pragma omp parallel for schedule(dynamic, 2)
  for (int j = 0; j < rows; ++j)
    accumulate_row(grid, field, t_grid, j, &base[j], &moment[static_cast<std::size_t>(j) * nt],
                   &contour[static_cast<std::size_t>(j) * nt]);
  return combine_rows(base, moment, contour, rows, nt);
}

}  // namespace robin::kernels
