#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "paulidyn/trajectory.hpp"
#include "paulidyn/triple.hpp"

namespace paulidyn {

enum class DivClass {
  CPDivisible,         // kappa points inside the CP tetrahedron cone
  PDivisibleOnly,      // all kappa_i <= 0 but outside the CP cone
  VolumeShrinkingOnly, // sum kappa_i <= 0 but some kappa_i > 0
  Indivisible,
};

std::string to_string(DivClass c);

/// Time-local classification of a kappa vector. The three cp_slack values
/// are the left-hand sides of the tetrahedron-cone inequalities
///   -k1+k2+k3 <= 0,  k1-k2+k3 <= 0,  k1+k2-k3 <= 0.
/// Boundary (within tol) counts as satisfying. The three predicates are
/// forced to nest (cp => p => volume) so tolerance jitter cannot produce a
/// class whose weaker conditions fail.
struct DivisibilityClass {
  DivClass kind = DivClass::CPDivisible;
  std::array<double, 3> cp_slack{};
  KappaVector kappa;
  double kappa_sum = 0.0;
  bool cp_holds = true;
  bool p_holds = true;
  bool volume_holds = true;
};

DivisibilityClass classify_point(const KappaVector& k,
                                 double tol = kMembershipTol);

using LambdaFn = std::function<PauliTriple(double)>;
using DLambdaFn = std::function<std::array<double, 3>(double)>;

/// kappa_i = lambda_i'(t)/lambda_i(t). Throws SingularPoint when some
/// lambda_i(t) = 0 (the map is not invertible there).
KappaVector kappa_analytic(const LambdaFn& lambda, const DLambdaFn& dlambda,
                           double t);

/// Finite-difference kappa at a trajectory sample: central difference of
/// ln|lambda| (O(dt^2) on smooth data), one-sided at the endpoints (O(dt),
/// flagged). A sign change or zero of any component across the stencil
/// throws SingularPoint.
struct SampledKappa {
  KappaVector kappa;
  bool one_sided = false;
};

SampledKappa kappa_sampled(const Trajectory& traj, std::size_t index);

/// Per-sample classification merged into maximal constant-class intervals.
/// Samples where kappa is singular are excluded from intervals and listed
/// separately.
struct TrajectorySegmentReport {
  struct Segment {
    double t_begin;
    double t_end;
    DivClass kind;
    bool p_holds;
    bool volume_holds;
  };
  struct Singular {
    double time;
    int axis;
  };
  std::vector<Segment> segments;
  std::vector<Singular> singular;
};

TrajectorySegmentReport classify_trajectory(const Trajectory& traj);

/// Index permutation (i,j,k), 0-based, such that lambda_i lambda_j = lambda_k.
using Permutation = std::array<int, 3>;

/// All permutations satisfying |l_i l_j - l_k| <= tol, with i < j.
std::vector<Permutation> ultimate_cp_permutations(const PauliTriple& t,
                                                  double tol);

/// Best-residual permutation, if any matches within tol.
std::optional<Permutation> is_ultimate_cp_triple(const PauliTriple& t,
                                                 double tol);

/// Membership in the body of channels reachable by semigroup dynamics with
/// nonnegative dissipator rates: 0 < lambda_i <= 1 and lambda_i lambda_j <=
/// lambda_k for every permutation.
bool in_markovian_body(const PauliTriple& t, double tol = kMembershipTol);

/// Monte Carlo estimate of the fraction of the CP tetrahedron occupied by
/// the semigroup-reachable body. Rejection sampling from the [-1,1]^3 cube;
/// deterministic for a fixed seed and independent of any parallel
/// partitioning (single fixed substream).
struct BodyFractionEstimate {
  double fraction = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0; // accepted tetrahedron samples
  std::uint64_t n_draws = 0;   // total cube draws
  std::uint64_t seed = 0;
};

BodyFractionEstimate mc_body_fraction(std::uint64_t n_samples,
                                      std::uint64_t seed);

} // namespace paulidyn
