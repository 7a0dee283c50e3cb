#pragma once

// Command-line front end: domain specs, report rows and the command driver.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "robin/boundary.hpp"
#include "robin/profile.hpp"

namespace robin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitUsage = 64;

/// Invalid command line or domain spec.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed domain spec:
///
///   {"family": "sphere",   "radius": 1}
///   {"family": "spheroid", "a": 0.8, "c": 1}
///   {"family": "torus",    "R": 1, "r": 0.3}
///   {"family": "sampled",  "topology": "sphere-like" | "torus-like", "samples": [[s, z], ...]}
///
/// with an optional "alpha": number | "dirichlet".
struct DomainSpec {
  std::string family;
  std::vector<double> parameters;
  std::vector<Point2> samples;
  Topology topology = Topology::SphereLike;
  std::optional<BoundaryParameter> alpha;
  /// "sphere", "prolate", "oblate" for spheroids; empty otherwise.
  std::string shape;

  RevolutionProfile profile() const;
};

/// Throws UsageError on malformed JSON or invalid parameters.
DomainSpec parse_domain_spec(const std::string& json_text);
DomainSpec load_domain_spec(const std::string& path);

/// Ordered key/value table; every command emits a list of rows plus metadata.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// 12 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// CSV: "# key: value" metadata lines, header, rows. Text: aligned key: value blocks.
void write_csv(const Table& table, std::ostream& out);
void write_text(const Table& table, std::ostream& out);

/// Runs one command line (argv[0] is the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace robin::cli
