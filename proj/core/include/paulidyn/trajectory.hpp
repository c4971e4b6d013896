#pragma once

#include <cstddef>
#include <vector>

#include "paulidyn/triple.hpp"

namespace paulidyn {

/// Logarithmic-derivative vector (lambda_i'/lambda_i), units 1/time. Its
/// direction relative to the CP tetrahedron / positivity cube decides
/// time-local divisibility.
struct KappaVector {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;

  double operator[](int axis) const {
    return axis == 0 ? kappa1 : axis == 1 ? kappa2 : kappa3;
  }
  double sum() const { return kappa1 + kappa2 + kappa3; }
};

/// Time grid plus Pauli-triple samples: the parameter-space picture of a
/// dynamical map. When the grid starts at t=0 the first sample must be the
/// identity triple (within 1e-12).
struct Trajectory {
  std::vector<double> times;
  std::vector<PauliTriple> samples;

  std::size_t size() const { return times.size(); }

  /// Validates: equal lengths, strictly increasing times, identity start at
  /// t=0. Throws ValidationError.
  static Trajectory checked(std::vector<double> times,
                            std::vector<PauliTriple> samples);

  /// Piecewise-linear evaluation (componentwise), clamped to the span.
  PauliTriple interpolate(double t) const;
};

} // namespace paulidyn
