#include "robin/axisym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "robin/errors.hpp"
#include "robin/geometry.hpp"

namespace robin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kScan = 4096;

using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= kTwoPi;
  while (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

// Angle of the curve point seen from the centre: measured from the downward
// axis direction for sphere-like profiles, from the +s direction for tori.
struct RayAngle {
  const RevolutionProfile& profile;
  Point2 centre;
  bool sphere_like;

  double raw(double u) const {
    const CurvePoint q = profile.eval(u);
    if (sphere_like) return std::atan2(q.s, centre[1] - q.z);
    return std::atan2(q.z - centre[1], q.s - centre[0]);
  }
};

Point2 region_centre(const RevolutionProfile& profile) {
  if (profile.topology() == Topology::SphereLike) {
    const double z0 = profile.eval(0.0).z, z1 = profile.eval(1.0).z;
    return {0.0, 0.5 * (z0 + z1)};
  }
  // area centroid of the closed polygon
  const std::vector<Point2> poly = profile.polyline(kScan);
  double a = 0.0, cs = 0.0, cz = 0.0;
  for (int k = 0; k < kScan; ++k) {
    const Point2& p = poly[k];
    const Point2& q = poly[k + 1];
    const double cross = p[0] * q[1] - q[0] * p[1];
    a += cross;
    cs += (p[0] + q[0]) * cross;
    cz += (p[1] + q[1]) * cross;
  }
  return {cs / (3.0 * a), cz / (3.0 * a)};
}

// Curve parameters u_j of the boundary nodes, equally spaced in arc length.
// The angle seen from the centre must increase strictly along the curve so
// that every ray meets it once.
std::vector<double> ray_parameters(const RevolutionProfile& profile, const Point2& centre, int angles) {
  const bool sphere_like = profile.topology() == Topology::SphereLike;
  const RayAngle angle{profile, centre, sphere_like};
  std::vector<double> scan(kScan + 1);
  scan[0] = angle.raw(0.0);
  for (int k = 1; k <= kScan; ++k) {
    const double u = static_cast<double>(k) / kScan;
    scan[k] = scan[k - 1] + wrap_angle(angle.raw(u) - scan[k - 1]);
    if (!(scan[k] > scan[k - 1]))
      throw GeometryError("meridian region is not star-shaped with respect to the mesh centre");
  }
  const double expected = sphere_like ? std::numbers::pi : kTwoPi;
  if (std::abs(scan[kScan] - scan[0] - expected) > 1e-6)
    throw GeometryError("rays from the mesh centre do not sweep the profile once");

  const std::vector<Point2> poly = profile.polyline(kScan);
  std::vector<double> arc(kScan + 1, 0.0);
  for (int k = 1; k <= kScan; ++k)
    arc[k] = arc[k - 1] + std::hypot(poly[k][0] - poly[k - 1][0], poly[k][1] - poly[k - 1][1]);

  const int count = sphere_like ? angles + 1 : angles;
  std::vector<double> u(count);
  for (int j = 0; j < count; ++j) {
    const double target = arc[kScan] * j / angles;
    if (j == 0 || j == angles) {
      u[j] = j == 0 ? 0.0 : 1.0;
      continue;
    }
    const auto it = std::upper_bound(arc.begin(), arc.end(), target);
    const int k = static_cast<int>(it - arc.begin()) - 1;
    const double f = (target - arc[k]) / (arc[k + 1] - arc[k]);
    u[j] = (k + f) / kScan;
  }
  return u;
}

double curve_length(const RevolutionProfile& profile) {
  const std::vector<Point2> poly = profile.polyline(kScan);
  double len = 0.0;
  for (int k = 0; k < kScan; ++k) len += std::hypot(poly[k + 1][0] - poly[k][0], poly[k + 1][1] - poly[k][1]);
  return len;
}

double min_ray_length(const RevolutionProfile& profile, const Point2& centre) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point2& p : profile.polyline(kScan)) best = std::min(best, std::hypot(p[0] - centre[0], p[1] - centre[1]));
  return best;
}

// Rings from the shortest ray, sectors from the curve length.
std::array<int, 2> mesh_counts(const RevolutionProfile& profile, double h) {
  const Point2 c = region_centre(profile);
  const int rings = static_cast<int>(std::ceil(min_ray_length(profile, c) / h - 1e-9));
  const int angles = std::max(8, static_cast<int>(std::ceil(curve_length(profile) / h - 1e-9)));
  return {rings, angles};
}

double triangle_area(const Point2& a, const Point2& b, const Point2& c) {
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

struct Assembled {
  SparseMatrix stiffness, mass, boundary;
};

Assembled assemble(const MeridianMesh& mesh) {
  std::vector<Eigen::Triplet<double>> k, m, b;
  k.reserve(mesh.triangles.size() * 9);
  m.reserve(mesh.triangles.size() * 9);
  for (const auto& tri : mesh.triangles) {
    const Point2& p0 = mesh.nodes[tri[0]];
    const Point2& p1 = mesh.nodes[tri[1]];
    const Point2& p2 = mesh.nodes[tri[2]];
    const double area = triangle_area(p0, p1, p2);
    const double s[3] = {p0[0], p1[0], p2[0]};
    const double mean_s = (s[0] + s[1] + s[2]) / 3.0;
    // gradients of the barycentric coordinates times 2 area
    const double gs[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
    const double gz[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double kij = kTwoPi * mean_s * (gs[i] * gs[j] + gz[i] * gz[j]) / (4.0 * area);
        double mij;
        if (i == j) {
          mij = area * (s[i] / 10.0 + (s[0] + s[1] + s[2] - s[i]) / 30.0);
        } else {
          const int l = 3 - i - j;
          mij = area * ((s[i] + s[j]) / 30.0 + s[l] / 60.0);
        }
        k.emplace_back(tri[i], tri[j], kij);
        m.emplace_back(tri[i], tri[j], kTwoPi * mij);
      }
    }
  }
  for (const auto& e : mesh.boundary_edges) {
    const Point2& p0 = mesh.nodes[e[0]];
    const Point2& p1 = mesh.nodes[e[1]];
    const double len = std::hypot(p1[0] - p0[0], p1[1] - p0[1]);
    const double s0 = p0[0], s1 = p1[0];
    b.emplace_back(e[0], e[0], kTwoPi * len * (s0 / 4.0 + s1 / 12.0));
    b.emplace_back(e[1], e[1], kTwoPi * len * (s0 / 12.0 + s1 / 4.0));
    b.emplace_back(e[0], e[1], kTwoPi * len * (s0 + s1) / 12.0);
    b.emplace_back(e[1], e[0], kTwoPi * len * (s0 + s1) / 12.0);
  }
  const int n = static_cast<int>(mesh.nodes.size());
  Assembled out;
  out.stiffness.resize(n, n);
  out.mass.resize(n, n);
  out.boundary.resize(n, n);
  out.stiffness.setFromTriplets(k.begin(), k.end());
  out.mass.setFromTriplets(m.begin(), m.end());
  out.boundary.setFromTriplets(b.begin(), b.end());
  return out;
}

// Pencil (A, M) on the free nodes.
struct Pencil {
  SparseMatrix a, m;
  std::vector<int> free;  // node index of every unknown
};

Pencil make_pencil(const MeridianMesh& mesh, const BoundaryParameter& alpha) {
  const Assembled asm_ = assemble(mesh);
  Pencil p;
  const int n = static_cast<int>(mesh.nodes.size());
  if (alpha.is_finite()) {
    p.a = asm_.stiffness + alpha.alpha() * asm_.boundary;
    p.m = asm_.mass;
    p.free.resize(n);
    for (int i = 0; i < n; ++i) p.free[i] = i;
    return p;
  }
  std::vector<int> index(n, 0);
  for (int b : mesh.boundary_nodes) index[b] = -1;
  for (int i = 0; i < n; ++i)
    if (index[i] == 0) {
      index[i] = static_cast<int>(p.free.size());
      p.free.push_back(i);
    }
  auto restrict = [&](const SparseMatrix& full) {
    std::vector<Eigen::Triplet<double>> t;
    for (int c = 0; c < full.outerSize(); ++c)
      for (SparseMatrix::InnerIterator it(full, c); it; ++it)
        if (index[it.row()] >= 0 && index[it.col()] >= 0) t.emplace_back(index[it.row()], index[it.col()], it.value());
    SparseMatrix r(static_cast<int>(p.free.size()), static_cast<int>(p.free.size()));
    r.setFromTriplets(t.begin(), t.end());
    return r;
  };
  p.a = restrict(asm_.stiffness);
  p.m = restrict(asm_.mass);
  return p;
}

double quotient(const Pencil& p, const Vector& x) {
  const double den = x.dot(p.m * x);
  if (!(den > 0.0)) throw std::invalid_argument("Rayleigh quotient of the zero function");
  return x.dot(p.a * x) / den;
}

class ShiftedSolver {
 public:
  explicit ShiftedSolver(const Pencil& p) : p_(p) {}

  // Number of eigenvalues below sigma; -1 when the factorization breaks down.
  int factor(double sigma) {
    ++factorizations;
    shifted_ = p_.a - sigma * p_.m;
    ldlt_.compute(shifted_);
    if (ldlt_.info() != Eigen::Success) return -1;
    const Vector d = ldlt_.vectorD();
    int negative = 0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (d[i] == 0.0 || !std::isfinite(d[i])) return -1;
      if (d[i] < 0.0) ++negative;
    }
    return negative;
  }

  Vector solve(const Vector& rhs) const { return ldlt_.solve(rhs); }

  int factorizations = 0;

 private:
  const Pencil& p_;
  SparseMatrix shifted_;
  Eigen::SimplicialLDLT<SparseMatrix> ldlt_;
};

}  // namespace

double MeridianMesh::volume() const {
  double v = 0.0;
  for (const auto& t : triangles) {
    const double a = triangle_area(nodes[t[0]], nodes[t[1]], nodes[t[2]]);
    v += a * (nodes[t[0]][0] + nodes[t[1]][0] + nodes[t[2]][0]) / 3.0;
  }
  return kTwoPi * v;
}

double MeridianMesh::boundary_area() const {
  double a = 0.0;
  for (const auto& e : boundary_edges) {
    const Point2& p = nodes[e[0]];
    const Point2& q = nodes[e[1]];
    a += std::hypot(q[0] - p[0], q[1] - p[1]) * 0.5 * (p[0] + q[0]);
  }
  return kTwoPi * a;
}

MeridianMesh build_mesh(const RevolutionProfile& profile, int rings, int angles) {
  if (rings < 1 || angles < 3) throw std::invalid_argument("mesh needs at least 1 ring and 3 sectors");
  const bool sphere_like = profile.topology() == Topology::SphereLike;
  const Point2 c = region_centre(profile);
  const std::vector<double> u = ray_parameters(profile, c, angles);
  const int per_ring = static_cast<int>(u.size());

  MeridianMesh mesh;
  mesh.rings = rings;
  mesh.angles = angles;
  std::vector<Point2> ends(per_ring);
  double longest = 0.0;
  for (int j = 0; j < per_ring; ++j) {
    const CurvePoint q = profile.eval(u[j]);
    ends[j] = {q.s, q.z};
    if (sphere_like && (j == 0 || j == per_ring - 1)) ends[j][0] = 0.0;
    longest = std::max(longest, std::hypot(ends[j][0] - c[0], ends[j][1] - c[1]));
  }
  mesh.h = longest / rings;

  mesh.nodes.reserve(1 + static_cast<std::size_t>(rings) * per_ring);
  mesh.nodes.push_back(c);
  for (int k = 1; k <= rings; ++k) {
    const double f = static_cast<double>(k) / rings;
    for (int j = 0; j < per_ring; ++j) {
      Point2 p = k == rings ? ends[j] : Point2{c[0] + f * (ends[j][0] - c[0]), c[1] + f * (ends[j][1] - c[1])};
      mesh.nodes.push_back(p);
    }
  }
  auto node = [&](int k, int j) {
    if (k == 0) return 0;
    if (!sphere_like) j = (j % per_ring + per_ring) % per_ring;
    return 1 + (k - 1) * per_ring + j;
  };
  auto add = [&](int a, int b, int d) {
    std::array<int, 3> t{a, b, d};
    const double area = triangle_area(mesh.nodes[a], mesh.nodes[b], mesh.nodes[d]);
    if (area < 0.0) std::swap(t[1], t[2]);
    if (area == 0.0) throw GeometryError("degenerate mesh triangle");
    mesh.triangles.push_back(t);
  };
  for (int j = 0; j < angles; ++j) {
    add(node(0, 0), node(1, j), node(1, j + 1));
    for (int k = 1; k < rings; ++k) {
      add(node(k, j), node(k + 1, j), node(k + 1, j + 1));
      add(node(k, j), node(k + 1, j + 1), node(k, j + 1));
    }
  }
  for (int j = 0; j < per_ring; ++j) {
    mesh.boundary_nodes.push_back(node(rings, j));
    const CurvePoint q = profile.eval(u[j]);
    double nx = q.dz, nz = -q.ds;
    const double len = std::hypot(nx, nz);
    mesh.boundary_normals.push_back({nx / len, nz / len});
  }
  for (int j = 0; j < angles; ++j) mesh.boundary_edges.push_back({node(rings, j), node(rings, j + 1)});
  return mesh;
}

MeridianMesh build_mesh(const RevolutionProfile& profile, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("mesh size must be positive");
  const auto [rings, angles] = mesh_counts(profile, h);
  return build_mesh(profile, rings, angles);
}

MeshEigenpair mesh_eigenpair(const MeridianMesh& mesh, const BoundaryParameter& alpha, double tol) {
  const Pencil p = make_pencil(mesh, alpha);
  const int n = static_cast<int>(p.free.size());
  if (n == 0) throw GeometryError("mesh has no free nodes");
  ShiftedSolver solver(p);

  // upper bound from the constant trial function
  Vector x = Vector::Ones(n);
  double hi = quotient(p, x);
  double gap = std::max(1.0, std::abs(hi));
  double lo = hi - gap;
  for (int tries = 0;; ++tries) {
    const int neg = solver.factor(lo);
    if (neg == 0) break;
    if (tries > 60) throw NumericalError("no shift below the first eigenvalue found");
    gap *= 2.0;
    lo = hi - gap;
  }
  // inertia bisection until the shift is close to the first eigenvalue
  for (int it = 0; it < 60 && hi - lo > 1e-2 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const int neg = solver.factor(mid);
    if (neg == 0)
      lo = mid;
    else if (neg > 0)
      hi = mid;
    else
      hi = mid;  // a singular shift sits on an eigenvalue; keep it as upper end
  }
  if (solver.factor(lo) != 0) throw NumericalError("shift factorization failed");

  MeshEigenpair out;
  double rho = quotient(p, x);
  for (int it = 1; it <= 500; ++it) {
    Vector y = solver.solve(p.m * x);
    y /= std::sqrt(y.dot(p.m * y));
    const double next = quotient(p, y);
    x = y;
    out.iterations = it;
    if (std::abs(next - rho) <= tol * std::max(1.0, std::abs(next))) {
      rho = next;
      break;
    }
    rho = next;
    if (it == 500) throw NumericalError("inverse iteration did not converge");
  }
  if (x.sum() < 0.0) x = -x;
  out.eigenvalue = rho;
  out.factorizations = solver.factorizations;
  out.vector.assign(mesh.nodes.size(), 0.0);
  for (int i = 0; i < n; ++i) out.vector[p.free[i]] = x[i];
  return out;
}

double rayleigh_quotient(const MeridianMesh& mesh, const BoundaryParameter& alpha, const std::vector<double>& u) {
  if (u.size() != mesh.nodes.size()) throw std::invalid_argument("test function size does not match the mesh");
  const Pencil p = make_pencil(mesh, alpha);
  Vector x(static_cast<Eigen::Index>(p.free.size()));
  for (std::size_t i = 0; i < p.free.size(); ++i) x[static_cast<Eigen::Index>(i)] = u[p.free[i]];
  return quotient(p, x);
}

DiscreteEigenResult solve_domain(const RevolutionProfile& profile, const BoundaryParameter& alpha, double h) {
  const double inner = inner_radius(profile);
  if (h == 0.0) h = inner / 20.0;
  if (!(h > 0.0)) throw std::invalid_argument("mesh size must be positive");
  if (inner / h < 20.0 - 1e-9)
    throw std::invalid_argument("mesh size too coarse: fewer than 20 cells across the inner radius");
  const auto [rings, angles] = mesh_counts(profile, h);

  DiscreteEigenResult r;
  for (int level = 0; level < 3; ++level) {
    const int f = 1 << level;
    const MeridianMesh mesh = build_mesh(profile, f * rings, f * angles);
    const MeshEigenpair e = mesh_eigenpair(mesh, alpha);
    r.levels.push_back({mesh.h, static_cast<int>(mesh.nodes.size()), e.eigenvalue});
  }
  const double l0 = r.levels[0].eigenvalue, l1 = r.levels[1].eigenvalue, l2 = r.levels[2].eigenvalue;
  r.h = r.levels[0].h;
  r.eigenvalue = l2;
  const double e1 = (4.0 * l1 - l0) / 3.0;
  const double e2 = (4.0 * l2 - l1) / 3.0;
  r.extrapolated = e2;
  r.error_estimate = std::abs(e2 - e1);
  const double d1 = l0 - l1, d2 = l1 - l2;
  const double noise = 1e-11 * std::max(1.0, std::abs(l2));
  if (std::abs(d1) <= noise || std::abs(d2) <= noise || d1 / d2 <= 0.0)
    r.order = std::numeric_limits<double>::quiet_NaN();
  else
    r.order = std::log2(d1 / d2);
  return r;
}

}  // namespace robin
