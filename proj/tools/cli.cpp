#include "robin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "robin/axisym.hpp"
#include "robin/errors.hpp"
#include "robin/geometry.hpp"
#include "robin/radial.hpp"
#include "robin/reduction.hpp"

#ifndef ROBIN_VERSION
#define ROBIN_VERSION "unknown"
#endif

namespace robin::cli {

namespace {

using json = nlohmann::json;

double positive_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) throw UsageError(std::string("domain spec needs numeric \"") + key + "\"");
  const double v = doc[key].get<double>();
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string("\"") + key + "\" must be positive");
  return v;
}

std::string boolean(bool v) { return v ? "true" : "false"; }

BoundaryParameter parse_alpha(const std::string& text) {
  try {
    return BoundaryParameter::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid boundary parameter '" + text + "' (number or dirichlet)");
  }
}

struct Result {
  Table table;
  int code = kExitOk;
};

struct Common {
  std::string out_path;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--out", common.out_path, "write the report to this file");
  cmd->add_option("--format", common.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
}

Table base_table(const std::string& command) {
  Table t;
  t.meta.emplace_back("tool", "robinspec " + version());
  t.meta.emplace_back("command", command);
  return t;
}

// ---- commands ----

struct BallArgs {
  int n = 3;
  double radius = 1.0;
  std::string alpha = "0";
  double tol = 1e-8;
};

Result cmd_eig_ball(const BallArgs& a) {
  const BoundaryParameter alpha = parse_alpha(a.alpha);
  Result r;
  r.table = base_table("eig-ball");
  r.table.meta.emplace_back("tol", format_number(a.tol));
  const RadialEigenpair e = solve_ball({a.n, a.radius, alpha}, a.tol);
  r.table.columns = {"n", "R", "alpha", "lambda1", "error_estimate", "boundary_residual", "cells"};
  r.table.rows.push_back({std::to_string(a.n), format_number(a.radius), alpha.to_string(), format_number(e.eigenvalue),
                          format_number(e.error_estimate), format_number(e.boundary_residual),
                          std::to_string(e.cells)});
  return r;
}

struct ShellArgs {
  int n = 3;
  double r1 = 0.5;
  double r2 = 1.0;
  std::string alpha = "0";
  double tol = 1e-9;
};

Result cmd_eig_shell(const ShellArgs& a) {
  const BoundaryParameter alpha = parse_alpha(a.alpha);
  Result r;
  r.table = base_table("eig-shell");
  r.table.meta.emplace_back("tol", format_number(a.tol));
  const ComparisonVerdict v = check_comparison(a.n, a.r1, a.r2, alpha, a.tol);
  r.table.columns = {"n", "R1", "R2", "alpha", "mu1_shell", "lambda1_ball", "margin", "tolerance", "asserted", "holds"};
  r.table.rows.push_back({std::to_string(a.n), format_number(a.r1), format_number(a.r2), alpha.to_string(),
                          format_number(v.mu1), format_number(v.lambda1), format_number(v.margin),
                          format_number(a.tol), boolean(v.asserted), boolean(v.holds)});
  if (v.asserted && !v.holds) r.code = kExitViolated;
  return r;
}

struct ReduceArgs {
  std::string spec;
  int grid = 101;
  int sampling = 128;
};

Result cmd_reduce(const ReduceArgs& a) {
  const DomainSpec spec = load_domain_spec(a.spec);
  const RevolutionProfile profile = spec.profile();
  const GeometrySummary g = summarize(profile);
  const ReducedShell shell = shell_radii_3d(g.area, g.volume);
  SamplingPlan plan;
  plan.resolution = a.sampling;
  const ParallelProfile pp = parallel_profile(profile, a.grid, plan);
  const RtMap map = r_of_t(pp, 3, g.area);

  Result r;
  r.table = base_table("reduce");
  auto& m = r.table.meta;
  m.emplace_back("domain", profile.describe());
  m.emplace_back("sampling_resolution", pp.exact ? "exact" : std::to_string(pp.resolution));
  m.emplace_back("volume_error", format_number(pp.volume_error));
  m.emplace_back("area_error", format_number(pp.area_error));
  m.emplace_back("area", format_number(g.area));
  m.emplace_back("volume", format_number(g.volume));
  m.emplace_back("inner_radius", format_number(g.inner_radius));
  m.emplace_back("R1", format_number(shell.inner_radius));
  m.emplace_back("R2", format_number(shell.outer_radius));
  m.emplace_back("max_abs_rprime", format_number(map.max_abs_rprime));
  m.emplace_back("argmax_t", format_number(map.argmax_t));
  m.emplace_back("degenerate_points", std::to_string(map.degenerate_points));
  r.table.columns = {"t", "volume_t", "area_t", "r", "rprime"};
  for (std::size_t k = 0; k < map.t_grid.size(); ++k)
    r.table.rows.push_back({format_number(map.t_grid[k]), format_number(pp.volume_at[k]), format_number(pp.area_at[k]),
                            format_number(map.r[k]), format_number(map.rprime[k])});
  return r;
}

struct ChainArgs {
  std::string spec;
  std::string alpha;
  double tol = 1e-10;
  double comparison_tol = 1e-9;
  double h = 0.0;
  bool no_direct = false;
  bool certificate = false;
  int grid = 101;
};

const std::vector<std::string> kChainColumns = {
    "domain",           "alpha",
    "route",            "admissible",
    "area",             "volume",
    "eta_bar",          "inner_radius",
    "R1",               "R2",
    "lambda1_direct",   "direct_error",
    "direct_order",     "mu1_shell",
    "lambda1_ball",     "margin_domain_shell",
    "tol_domain_shell", "asserted_domain_shell",
    "holds_domain_shell", "margin_shell_ball",
    "tol_shell_ball",   "asserted_shell_ball",
    "holds_shell_ball", "max_abs_rprime",
    "status"};

std::vector<std::string> chain_row(const BoundChainReport& rep) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::string status = rep.asserted_hold() ? (rep.admissible ? "holds" : "informational") : "violated";
  return {rep.domain,
          rep.alpha.to_string(),
          to_string(rep.route),
          boolean(rep.admissible),
          format_number(rep.geometry.area),
          format_number(rep.geometry.volume),
          format_number(rep.geometry.eta_bar),
          format_number(rep.geometry.inner_radius),
          format_number(rep.shell.inner_radius),
          format_number(rep.shell.outer_radius),
          format_number(rep.lambda1_direct.value_or(nan)),
          format_number(rep.direct ? rep.direct->error_estimate : nan),
          format_number(rep.direct ? rep.direct->order : nan),
          format_number(rep.mu1_shell),
          format_number(rep.lambda1_ball),
          format_number(rep.margin_domain_shell),
          format_number(rep.direct ? rep.tolerance_domain_shell : nan),
          boolean(rep.assert_domain_shell),
          boolean(rep.holds_domain_shell),
          format_number(rep.margin_shell_ball),
          format_number(rep.tolerance_shell_ball),
          boolean(rep.assert_shell_ball),
          boolean(rep.holds_shell_ball),
          format_number(rep.max_abs_rprime.value_or(nan)),
          status};
}

ChainOptions chain_options(const ChainArgs& a) {
  ChainOptions o;
  o.direct = !a.no_direct;
  o.mesh_h = a.h;
  o.tol = a.tol;
  o.comparison_tol = a.comparison_tol;
  o.certificate = a.certificate;
  o.certificate_points = a.grid;
  return o;
}

void chain_meta(Table& t, const ChainArgs& a) {
  t.meta.emplace_back("tol", format_number(a.tol));
  t.meta.emplace_back("comparison_tol", format_number(a.comparison_tol));
  t.meta.emplace_back("mesh_h", a.h > 0.0 ? format_number(a.h) : "inner_radius/20");
  t.meta.emplace_back("direct", boolean(!a.no_direct));
  t.meta.emplace_back("certificate_points", a.certificate ? std::to_string(a.grid) : "off");
}

Result cmd_chain(const ChainArgs& a) {
  const DomainSpec spec = load_domain_spec(a.spec);
  BoundaryParameter alpha = BoundaryParameter::neumann();
  if (!a.alpha.empty())
    alpha = parse_alpha(a.alpha);
  else if (spec.alpha)
    alpha = *spec.alpha;
  else
    throw UsageError("no boundary parameter: give --alpha or \"alpha\" in the spec");
  const BoundChainReport rep = bound_chain(spec.profile(), alpha, chain_options(a));
  Result r;
  r.table = base_table("chain");
  chain_meta(r.table, a);
  r.table.columns = kChainColumns;
  r.table.rows.push_back(chain_row(rep));
  if (!rep.asserted_hold()) r.code = kExitViolated;
  return r;
}

struct SweepArgs {
  std::string family;
  double from = 0.1;
  double to = 0.9;
  int steps = 9;
  std::vector<std::string> alphas{"-1"};
  int n = 3;
  ChainArgs chain;
};

Result cmd_sweep(const SweepArgs& a) {
  if (a.steps < 1) throw UsageError("--steps must be >= 1");
  if (a.alphas.empty()) throw UsageError("--alphas must not be empty");
  std::vector<double> params(a.steps);
  for (int k = 0; k < a.steps; ++k) params[k] = a.steps == 1 ? a.from : a.from + (a.to - a.from) * k / (a.steps - 1);
  std::vector<BoundaryParameter> alphas;
  for (const std::string& s : a.alphas) alphas.push_back(parse_alpha(s));

  Result r;
  r.table = base_table("sweep");
  r.table.meta.emplace_back("family", a.family);
  const bool condition = a.family == "torus-condition" || a.family == "ellipsoid-condition";
  const std::size_t cells = condition ? params.size() : params.size() * alphas.size();
  std::vector<std::vector<std::string>> rows(cells);
  std::vector<int> violated(cells, 0);
  std::vector<std::string> failures(cells);

  if (a.family == "spheroid" || a.family == "torus") {
    chain_meta(r.table, a.chain);
    r.table.columns = kChainColumns;
    r.table.columns.insert(r.table.columns.begin(), "m");
  } else if (a.family == "shell") {
    r.table.meta.emplace_back("n", std::to_string(a.n));
    r.table.meta.emplace_back("comparison_tol", format_number(a.chain.comparison_tol));
    r.table.columns = {"ratio", "R1", "R2", "alpha", "mu1_shell", "lambda1_ball", "margin", "tolerance",
                       "asserted", "holds"};
  } else if (condition) {
    r.table.columns = {"m", "lhs", "rhs", "holds"};
    if (a.family == "torus-condition")
      r.table.meta.emplace_back("threshold", format_number(torus_condition_threshold(1e-12)));
  } else {
    throw UsageError("unknown sweep family '" + a.family +
                     "' (spheroid, torus, shell, torus-condition, ellipsoid-condition)");
  }

  const ChainOptions opts = chain_options(a.chain);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t c = 0; c < cells; ++c) {
    try {
      if (condition) {
        const double m = params[c];
        const ConditionValue v = a.family == "torus-condition" ? torus_condition(m) : ellipsoid_condition(m);
        rows[c] = {format_number(m), format_number(v.lhs), format_number(v.rhs), boolean(v.holds)};
        continue;
      }
      const double m = params[c / alphas.size()];
      const BoundaryParameter& alpha = alphas[c % alphas.size()];
      if (a.family == "shell") {
        const ComparisonVerdict v = check_comparison(a.n, m, 1.0, alpha, a.chain.comparison_tol);
        rows[c] = {format_number(m),           format_number(m),         "1",
                   alpha.to_string(),          format_number(v.mu1),     format_number(v.lambda1),
                   format_number(v.margin),    format_number(a.chain.comparison_tol),
                   boolean(v.asserted),        boolean(v.holds)};
        violated[c] = v.asserted && !v.holds;
        continue;
      }
      const RevolutionProfile profile =
          a.family == "spheroid" ? RevolutionProfile::spheroid(m, 1.0) : RevolutionProfile::torus(1.0, m);
      const BoundChainReport rep = bound_chain(profile, alpha, opts);
      rows[c] = chain_row(rep);
      rows[c].insert(rows[c].begin(), format_number(m));
      violated[c] = !rep.asserted_hold();
    } catch (const std::exception& e) {
      failures[c] = e.what();
    }
  }
  for (const std::string& f : failures)
    if (!f.empty()) throw NumericalError(f);
  r.table.rows = std::move(rows);
  if (std::any_of(violated.begin(), violated.end(), [](int v) { return v != 0; })) r.code = kExitViolated;
  return r;
}

Result cmd_mean_check(const std::string& path) {
  const DomainSpec spec = load_domain_spec(path);
  const RevolutionProfile profile = spec.profile();
  const GeometrySummary g = summarize(profile);
  const MeanConditionReport mc = mean_condition(g, 3);
  Result r;
  r.table = base_table("mean-check");
  r.table.meta.emplace_back("curvature_convention", "average of principal curvatures");
  r.table.columns = {"domain", "area", "eta_bar", "eta_bar_sum_convention", "lhs", "lhs_sum_convention", "rhs",
                     "holds", "holds_sum_convention"};
  r.table.rows.push_back({profile.describe(), format_number(g.area), format_number(g.eta_bar),
                          format_number(2.0 * g.eta_bar), format_number(mc.lhs), format_number(mc.lhs_sum_convention),
                          format_number(mc.rhs), boolean(mc.holds), boolean(mc.holds_sum_convention)});
  return r;
}

Result cmd_curvature(const std::string& path, int grid) {
  if (grid < 2) throw UsageError("--grid must be >= 2");
  const DomainSpec spec = load_domain_spec(path);
  const RevolutionProfile profile = spec.profile();
  const GeometrySummary g = summarize(profile);
  Result r;
  r.table = base_table("curvature");
  auto& m = r.table.meta;
  m.emplace_back("domain", profile.describe());
  m.emplace_back("area", format_number(g.area));
  m.emplace_back("volume", format_number(g.volume));
  m.emplace_back("total_mean_curvature", format_number(g.total_mean_curvature));
  m.emplace_back("total_gauss_curvature", format_number(g.total_gauss_curvature));
  m.emplace_back("euler_characteristic", std::to_string(g.euler_characteristic));
  m.emplace_back("eta_bar", format_number(g.eta_bar));
  m.emplace_back("eta_bar_sum_convention", format_number(2.0 * g.eta_bar));
  m.emplace_back("inner_radius", format_number(g.inner_radius));
  m.emplace_back("convexity", to_string(g.convexity));
  m.emplace_back("quadrature_error", format_number(g.quadrature_error));
  r.table.columns = {"u", "s", "z", "k_meridian", "k_parallel", "mean", "gaussian"};
  for (int k = 0; k < grid; ++k) {
    const double u = static_cast<double>(k) / (grid - 1);
    const CurvePoint q = profile.eval(u);
    const Curvatures c = curvatures(profile, u);
    r.table.rows.push_back({format_number(u), format_number(q.s), format_number(q.z), format_number(c.meridian),
                            format_number(c.parallel), format_number(c.mean), format_number(c.gaussian)});
  }
  return r;
}

}  // namespace

std::string version() { return ROBIN_VERSION; }

RevolutionProfile DomainSpec::profile() const {
  if (family == "sphere") return RevolutionProfile::sphere(parameters.at(0));
  if (family == "spheroid") return RevolutionProfile::spheroid(parameters.at(0), parameters.at(1));
  if (family == "torus") return RevolutionProfile::torus(parameters.at(0), parameters.at(1));
  return RevolutionProfile::sampled(samples, topology);
}

DomainSpec parse_domain_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("domain spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("domain spec must be a JSON object");
  if (!doc.contains("family") || !doc["family"].is_string()) throw UsageError("domain spec needs \"family\"");
  DomainSpec spec;
  spec.family = doc["family"].get<std::string>();
  if (spec.family == "sphere") {
    spec.parameters = {positive_field(doc, "radius")};
  } else if (spec.family == "spheroid") {
    const double a = positive_field(doc, "a"), c = positive_field(doc, "c");
    spec.parameters = {a, c};
    spec.shape = a == c ? "sphere" : (a < c ? "prolate" : "oblate");
  } else if (spec.family == "torus") {
    const double big = positive_field(doc, "R"), small = positive_field(doc, "r");
    if (!(small < big)) throw UsageError("torus needs r < R");
    spec.parameters = {big, small};
  } else if (spec.family == "sampled") {
    const std::string topo = doc.value("topology", std::string("sphere-like"));
    if (topo == "sphere-like")
      spec.topology = Topology::SphereLike;
    else if (topo == "torus-like")
      spec.topology = Topology::TorusLike;
    else
      throw UsageError("topology must be sphere-like or torus-like");
    if (!doc.contains("samples") || !doc["samples"].is_array()) throw UsageError("sampled spec needs \"samples\"");
    for (const json& p : doc["samples"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
        throw UsageError("samples must be [s, z] number pairs");
      spec.samples.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    try {
      (void)spec.profile();
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid samples: ") + e.what());
    }
  } else {
    throw UsageError("unknown family '" + spec.family + "' (sphere, spheroid, torus, sampled)");
  }
  if (doc.contains("alpha")) {
    const json& al = doc["alpha"];
    if (al.is_number())
      spec.alpha = BoundaryParameter::robin(al.get<double>());
    else if (al.is_string())
      spec.alpha = parse_alpha(al.get<std::string>());
    else
      throw UsageError("\"alpha\" must be a number or \"dirichlet\"");
  }
  return spec;
}

DomainSpec load_domain_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read domain spec '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_domain_spec(text.str());
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [k, v] : table.meta) out << "# " << k << ": " << v << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      const std::string& c = cells[i];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char ch : c) out << (ch == '"' ? "\"\"" : std::string(1, ch));
        out << '"';
      } else {
        out << c;
      }
    }
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
}

void write_text(const Table& table, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : table.meta) width = std::max(width, k.size());
  for (const auto& c : table.columns) width = std::max(width, c.size());
  auto pad = [&](const std::string& k) { return k + ':' + std::string(width - k.size() + 1, ' '); };
  for (const auto& [k, v] : table.meta) out << pad(k) << v << '\n';
  for (const auto& row : table.rows) {
    out << '\n';
    for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) out << pad(table.columns[i]) << row[i] << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robin eigenvalue comparison toolkit for axisymmetric domains", "robinspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Common common;
  BallArgs ball;
  auto* eig_ball = app.add_subcommand("eig-ball", "first eigenvalue of a ball");
  eig_ball->add_option("--n", ball.n, "dimension")->check(CLI::Range(1, 64));
  eig_ball->add_option("--R", ball.radius, "radius")->check(CLI::PositiveNumber);
  eig_ball->add_option("--alpha", ball.alpha, "number or dirichlet");
  eig_ball->add_option("--tol", ball.tol, "solver tolerance")->check(CLI::PositiveNumber);
  add_common(eig_ball, common);

  ShellArgs shell;
  auto* eig_shell = app.add_subcommand("eig-shell", "first eigenvalue of a shell, compared with the outer ball");
  eig_shell->add_option("--n", shell.n, "dimension")->check(CLI::Range(1, 64));
  eig_shell->add_option("--R1", shell.r1, "inner radius")->check(CLI::PositiveNumber);
  eig_shell->add_option("--R2", shell.r2, "outer radius")->check(CLI::PositiveNumber);
  eig_shell->add_option("--alpha", shell.alpha, "number or dirichlet");
  eig_shell->add_option("--tol", shell.tol, "comparison tolerance")->check(CLI::PositiveNumber);
  add_common(eig_shell, common);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "comparison shell and r(t) map of a domain");
  reduce_cmd->add_option("--spec", reduce.spec, "domain spec (JSON)")->required();
  reduce_cmd->add_option("--grid", reduce.grid, "t samples")->check(CLI::Range(2, 100000));
  reduce_cmd->add_option("--sampling", reduce.sampling, "coarse sampling resolution")->check(CLI::Range(8, 4096));
  add_common(reduce_cmd, common);

  ChainArgs chain;
  auto add_chain_options = [](CLI::App* cmd, ChainArgs& c) {
    cmd->add_option("--tol", c.tol, "radial solver tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--comparison-tol", c.comparison_tol, "tolerance of the shell/ball inequality")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mesh-h", c.h, "coarsest mesh size (default inner radius / 20)")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--no-direct", c.no_direct, "skip the finite-element eigenvalue");
    cmd->add_flag("--certificate", c.certificate, "sample the parallel sets and report max |r'|");
    cmd->add_option("--grid", c.grid, "t samples of the certificate")->check(CLI::Range(2, 100000));
  };
  auto* chain_cmd = app.add_subcommand("chain", "lambda1(domain) <= mu1(shell) <= lambda1(ball)");
  chain_cmd->add_option("--spec", chain.spec, "domain spec (JSON)")->required();
  chain_cmd->add_option("--alpha", chain.alpha, "overrides the spec's alpha");
  add_chain_options(chain_cmd, chain);
  add_common(chain_cmd, common);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter scans over a family");
  sweep_cmd->add_option("--family", sweep.family, "spheroid, torus, shell, torus-condition, ellipsoid-condition")
      ->required();
  sweep_cmd->add_option("--from", sweep.from, "first parameter");
  sweep_cmd->add_option("--to", sweep.to, "last parameter");
  sweep_cmd->add_option("--steps", sweep.steps, "number of parameters");
  sweep_cmd->add_option("--alphas", sweep.alphas, "boundary parameters")->delimiter(',');
  sweep_cmd->add_option("--n", sweep.n, "dimension (shell family)")->check(CLI::Range(1, 64));
  add_chain_options(sweep_cmd, sweep.chain);
  add_common(sweep_cmd, common);

  std::string mean_spec;
  auto* mean_cmd = app.add_subcommand("mean-check", "mean-curvature condition of a domain");
  mean_cmd->add_option("--spec", mean_spec, "domain spec (JSON)")->required();
  add_common(mean_cmd, common);

  std::string curv_spec;
  int curv_grid = 21;
  auto* curv_cmd = app.add_subcommand("curvature", "principal curvatures along the profile");
  curv_cmd->add_option("--spec", curv_spec, "domain spec (JSON)")->required();
  curv_cmd->add_option("--grid", curv_grid, "parameter samples")->check(CLI::Range(2, 1000000));
  add_common(curv_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "robinspec: " << e.what() << '\n';
    return kExitUsage;
  }

  Result result;
  try {
    if (eig_ball->parsed())
      result = cmd_eig_ball(ball);
    else if (eig_shell->parsed())
      result = cmd_eig_shell(shell);
    else if (reduce_cmd->parsed())
      result = cmd_reduce(reduce);
    else if (chain_cmd->parsed())
      result = cmd_chain(chain);
    else if (sweep_cmd->parsed())
      result = cmd_sweep(sweep);
    else if (mean_cmd->parsed())
      result = cmd_mean_check(mean_spec);
    else
      result = cmd_curvature(curv_spec, curv_grid);
  } catch (const UsageError& e) {
    err << "robinspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "robinspec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "robinspec: " << e.what() << '\n';
    return kExitNumerical;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file.open(common.out_path);
    if (!file) {
      err << "robinspec: cannot write '" << common.out_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (common.format == "text")
    write_text(result.table, *sink);
  else
    write_csv(result.table, *sink);
  return result.code;
}

}  // namespace robin::cli
