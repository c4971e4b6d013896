#pragma once

#include <array>
#include <functional>
#include <string>

#include "paulidyn/divisibility.hpp"
#include "paulidyn/trajectory.hpp"
#include "paulidyn/triple.hpp"

namespace paulidyn {

using RateTriple = std::array<double, 3>; // units 1/time

/// Decoherence rates Gamma (lambda_j = exp(-Gamma_j t)) and dissipator rates
/// gamma of a unital qubit semigroup generator, related by the +-1 matrix
///   gamma = (1/2) [[-1,1,1],[1,-1,1],[1,1,-1]] Gamma.
/// CP generation requires all gamma >= 0.
RateTriple gamma_from_Gamma(const RateTriple& Gamma);
RateTriple Gamma_from_gamma(const RateTriple& gamma);

struct MixtureWeights {
  double p1 = 1.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double operator[](int m) const { return m == 0 ? p1 : m == 1 ? p2 : p3; }

  /// Simplex membership within 1e-12; throws ValidationError.
  static MixtureWeights checked(double p1, double p2, double p3);
};

/// Explicit axis permutation (i,j,k) of {0,1,2}; keeps index conventions
/// out of the closed forms.
struct AxisTriple {
  int i = 0;
  int j = 1;
  int k = 2;

  static AxisTriple checked(int i, int j, int k);
};

/// Closed-form map family: lambda(t), its hand-coded derivative, and where
/// available an analytic kappa. lambda(0) = (1,1,1) for every family.
struct AnalyticFamily {
  std::string name;
  LambdaFn lambda;
  DLambdaFn dlambda;
  std::function<KappaVector(double)> kappa; // may be empty
  bool cp_generating = true;
};

/// kappa from the closed form when present, otherwise dlambda/lambda.
KappaVector family_kappa(const AnalyticFamily& f, double t);

/// lambda_j(t) = exp(-Gamma_j t). Flagged non-CP-generating when some
/// dissipator rate gamma_j(Gamma) is negative.
AnalyticFamily pauli_semigroup(const RateTriple& Gamma);

/// Two-term dissipator semigroup: lambda_i = e^{-gj t}, lambda_j = e^{-gi t},
/// lambda_k = e^{-(gi+gj) t}; satisfies lambda_i lambda_j = lambda_k
/// identically.
AnalyticFamily ultimate_semigroup(double gi, double gj, const AxisTriple& axes);

/// Convex mixture of the three single-axis dephasing semigroups with
/// dissipators gamma (sigma_m . sigma_m - .):
/// lambda_i(t) = p_i + (1-p_i) e^{-2 gamma t}.
AnalyticFamily dephasing_mixture(const MixtureWeights& p, double gamma);

/// Two-parameter family mixing a skewed amplitude-damping semigroup with two
/// pure dephasings. For strictly positive weights it is CP indivisible at
/// every t > 0 (the cone slack kappa_i + kappa_j - kappa_k stays positive).
/// Carries the analytic kappa.
AnalyticFamily eternal_family(const MixtureWeights& p, double gi, double gj,
                              const AxisTriple& axes);

/// lambda_axis = 1, other components cos(2 g t).
AnalyticFamily oscillatory_dephasing(double g, int axis);

/// Equal-weight mixture of the three oscillatory dephasings:
/// lambda_i(t) = (1 + 2 cos 2gt)/3 for all i.
AnalyticFamily oscillatory_depolarizing(double g);

/// Trajectory that monotonically shrinks the accessible-state volume while
/// lambda_1 and lambda_2 are non-monotonic (so it is not P divisible).
AnalyticFamily volume_example();

/// Uniform grid over [0, t_max], n_points >= 2 samples.
Trajectory sample_family(const AnalyticFamily& f, double t_max,
                         std::size_t n_points);

} // namespace paulidyn
