#pragma once

#include <string>

namespace prebandit {

// Monotone map from the reals to [0,1] with sigma(1/2) = 1/2 and
// sigma(x) > 0 iff x > 0, used by CBR to turn normalized confidence excess
// into an inclusion probability. Two variants:
//   clamp      sigma(x) = min(1, max(0, x))
//   arctan     sigma(x) = atan((x - 1/2) / ((1-x)^gamma * x^gamma)) / pi + 1/2
//              on (0,1), extended by 0 below and 1 above.
class SShapedFunction {
 public:
  enum class Kind { clamp, arctan };

  static SShapedFunction clamp() { return SShapedFunction(Kind::clamp, 0.0); }
  static SShapedFunction arctan(double gamma);

  double operator()(double x) const;

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  std::string label() const;

 private:
  SShapedFunction(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

  Kind kind_;
  double gamma_;
};

}  // namespace prebandit
