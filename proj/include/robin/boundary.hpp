#pragma once

#include <string>
#include <variant>

namespace robin {

/// Robin constant in du/dnu + alpha u = 0, or the formal Dirichlet limit
/// alpha = infinity.
class BoundaryParameter {
 public:
  struct Dirichlet {
    bool operator==(const Dirichlet&) const = default;
  };

  static BoundaryParameter robin(double alpha) { return BoundaryParameter(alpha); }
  static BoundaryParameter dirichlet() { return BoundaryParameter(Dirichlet{}); }
  static BoundaryParameter neumann() { return BoundaryParameter(0.0); }

  bool is_dirichlet() const { return std::holds_alternative<Dirichlet>(value_); }
  bool is_finite() const { return !is_dirichlet(); }

  /// Throws std::logic_error for the Dirichlet variant.
  double alpha() const;

  /// alpha <= 0 (Neumann included); false for Dirichlet.
  bool is_nonpositive() const { return is_finite() && alpha() <= 0.0; }

  /// Scales the boundary parameter like alpha -> c * alpha; Dirichlet is fixed.
  BoundaryParameter scaled(double c) const {
    return is_dirichlet() ? *this : robin(c * alpha());
  }

  /// "dirichlet" or the number with 17 significant digits.
  std::string to_string() const;

  /// Accepts "dirichlet", "inf", "infinity" (case-insensitive) or a number.
  static BoundaryParameter parse(const std::string& text);

  friend bool operator==(const BoundaryParameter&, const BoundaryParameter&) = default;

 private:
  explicit BoundaryParameter(double a) : value_(a) {}
  explicit BoundaryParameter(Dirichlet d) : value_(d) {}

  std::variant<double, Dirichlet> value_;
};

}  // namespace robin
