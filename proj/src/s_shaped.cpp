#include "prebandit/s_shaped.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prebandit {

SShapedFunction SShapedFunction::arctan(double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("SShapedFunction: gamma must be positive");
  return SShapedFunction(Kind::arctan, gamma);
}

double SShapedFunction::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (kind_ == Kind::clamp) return x;
  const double scale = std::pow(1.0 - x, gamma_) * std::pow(x, gamma_);
  return std::atan((x - 0.5) / scale) / std::numbers::pi + 0.5;
}

std::string SShapedFunction::label() const {
  if (kind_ == Kind::clamp) return "clamp";
  if (gamma_ == 2.0) return "arctan";
  return "arctan(" + std::to_string(gamma_) + ")";
}

}  // namespace prebandit
