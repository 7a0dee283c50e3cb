#pragma once

// First Robin eigenvalue of an axisymmetric domain from its meridian region.
//
// The zero angular mode reduces the problem to the quotient
//
//   (int |grad u|^2 2 pi s ds dz + alpha int u^2 2 pi s dl) / int u^2 2 pi s ds dz
//
// on the meridian region. It is discretised with linear triangles on a polar
// mesh around an interior centre: a point on the axis for sphere-like profiles
// (the half-disk of rays from the lower to the upper axis point), the tube
// centre for tori. Every ray must meet the profile once, so the region has to
// be star-shaped with respect to the centre. The s-weight is integrated exactly
// on every triangle and boundary edge. Axis nodes need no condition.

#include <array>
#include <vector>

#include "robin/boundary.hpp"
#include "robin/profile.hpp"

namespace robin {

struct MeridianMesh {
  std::vector<Point2> nodes;                  // (s, z)
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise in (s, z)
  std::vector<std::array<int, 2>> boundary_edges;
  std::vector<int> boundary_nodes;  // on the profile curve
  std::vector<Point2> boundary_normals;  // outward unit normals of the curve at boundary_nodes
  int rings = 0;
  int angles = 0;
  double h = 0.0;  // largest radial spacing (along the longest ray)

  /// Discrete int 2 pi s over the triangles and over the boundary edges.
  double volume() const;
  double boundary_area() const;
};

/// Polar mesh with `rings` radial layers and `angles` angular sectors.
/// Throws GeometryError when a ray from the centre does not meet the profile
/// exactly once.
MeridianMesh build_mesh(const RevolutionProfile& profile, int rings, int angles);

/// Mesh with radial spacing at most h along the shortest ray and boundary
/// nodes at most h apart along the curve.
MeridianMesh build_mesh(const RevolutionProfile& profile, double h);

struct MeshEigenpair {
  double eigenvalue = 0.0;
  std::vector<double> vector;  // nodal values, unit M-norm, positive
  int iterations = 0;
  int factorizations = 0;
};

/// Smallest eigenvalue of the assembled pencil on one mesh.
MeshEigenpair mesh_eigenpair(const MeridianMesh& mesh, const BoundaryParameter& alpha, double tol = 1e-12);

/// Discrete Rayleigh quotient of nodal values u (Dirichlet: boundary values
/// are ignored and treated as zero). Throws std::invalid_argument for u = 0.
double rayleigh_quotient(const MeridianMesh& mesh, const BoundaryParameter& alpha, const std::vector<double>& u);

struct MeshLevel {
  double h = 0.0;
  int nodes = 0;
  double eigenvalue = 0.0;
};

struct DiscreteEigenResult {
  double eigenvalue = 0.0;  // finest level
  double h = 0.0;           // coarsest level
  std::vector<MeshLevel> levels;
  double extrapolated = 0.0;
  /// |extrapolate(h/2, h/4) - extrapolate(h, h/2)|
  double error_estimate = 0.0;
  /// log2 of the ratio of successive level differences; NaN when both
  /// differences are at rounding level.
  double order = 0.0;
};

/// Solves on meshes h, h/2, h/4 and Richardson-extrapolates the last two with
/// the nominal second order. h must give at least 20 cells across the inner
/// radius; h = 0 selects inner radius / 20.
DiscreteEigenResult solve_domain(const RevolutionProfile& profile, const BoundaryParameter& alpha, double h = 0.0);

}  // namespace robin
