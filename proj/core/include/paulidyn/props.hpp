#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paulidyn/families.hpp"
#include "paulidyn/linalg.hpp"
#include "paulidyn/trajectory.hpp"
#include "paulidyn/triple.hpp"

namespace paulidyn {

/// Accessible-state volume |lambda1 lambda2 lambda3| (Bloch-ellipsoid
/// volume up to the constant ball factor). Multiplicative under channel
/// composition.
double volume(const PauliTriple& t);

/// Classical capacity of the unital qubit channel,
/// 1 - h2[(1 - max|lambda_i|)/2] with h2 the base-2 binary entropy.
double classical_capacity(const PauliTriple& t);

/// Half trace norm of the difference, via eigenvalues of the Hermitian
/// difference.
double trace_distance(const Matrix& r1, const Matrix& r2);

/// Natural-log relative entropy tr[r1 (ln r1 - ln r2)]; +infinity when
/// supp(r1) is not inside supp(r2). Eigenvalues are clipped at -1e-12
/// before logs.
double relative_entropy(const Matrix& r1, const Matrix& r2);

/// Two-copy entanglement annihilation criterion for Pauli channels:
/// lambda1^2 + lambda2^2 + lambda3^2 <= 1 (boundary inside).
bool is_entanglement_annihilating_2copy(const PauliTriple& t,
                                        double tol = kMembershipTol);

/// Smallest positive root of
///   p1^2+p2^2+p3^2 = (1 - e^{-g t} - e^{-2 g t}) / (1 - e^{-g t} + e^{-2 g t})
/// by bracketed bisection (1e-10 relative); nullopt when no finite root
/// exists (e.g. a degenerate weight vector). Scales exactly as t(gamma) =
/// t(1)/gamma.
std::optional<double> t_ea_dephasing_mixture(const MixtureWeights& p,
                                             double gamma);

enum class MonotoneQuantity {
  TraceDistance,
  RelativeEntropy,
  Capacity,
  Volume,
};

std::string to_string(MonotoneQuantity q);

/// Evaluation of a P-divisibility monotone along a trajectory, with the
/// intervals where it increases by more than tol between consecutive
/// samples. Distance-like quantities evolve the given state pair through
/// the map; capacity and volume ignore the pair.
struct MonotonicityReport {
  std::string quantity;
  std::vector<double> times;
  std::vector<double> values;
  struct Interval {
    double t_begin;
    double t_end;
  };
  std::vector<Interval> violations;

  bool clean() const { return violations.empty(); }
};

MonotonicityReport monotonicity_scan(const Trajectory& traj, const Matrix& rho1,
                                     const Matrix& rho2, MonotoneQuantity q,
                                     double tol = 1e-10);

} // namespace paulidyn
