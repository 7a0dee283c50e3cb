#include "robin/boundary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace robin {

double BoundaryParameter::alpha() const {
  if (is_dirichlet()) throw std::logic_error("alpha() requested for the Dirichlet boundary parameter");
  return std::get<double>(value_);
}

std::string BoundaryParameter::to_string() const {
  if (is_dirichlet()) return "dirichlet";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", alpha());
  return buf;
}

BoundaryParameter BoundaryParameter::parse(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "dirichlet" || lower == "inf" || lower == "infinity") return dirichlet();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("boundary parameter must be a number or 'dirichlet', got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v))
    throw std::invalid_argument("boundary parameter must be a number or 'dirichlet', got '" + text + "'");
  return robin(v);
}

}  // namespace robin
