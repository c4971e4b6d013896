#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "paulidyn/linalg.hpp"
#include "paulidyn/trajectory.hpp"
#include "paulidyn/triple.hpp"

namespace paulidyn {

/// Pairwise exchange Hamiltonian H = (g1 sigma_a (x) sigma_a +
/// g2 sigma_b (x) sigma_b)/2 on a distinct axis pair; the canonical choice
/// (a,b) = (x,y) reproduces the standard two-axis collision rule.
struct HamiltonianXY {
  double g1 = 0.0;
  double g2 = 0.0;
  int axis_a = 0;
  int axis_b = 1;
};

/// Controlled-axis rule U = e^{+i g tau sigma_m} (x) |0><0| +
/// e^{-i g tau sigma_m} (x) |1><1|. Block diagonal in the environment
/// computational basis, which is what makes correlated-environment runs
/// exactly reducible to per-branch phases.
struct ControlledAxis {
  int axis = 2;
  double g = 0.0;
};

struct ElementaryCollision {
  std::variant<HamiltonianXY, ControlledAxis> kind;
  double tau = 0.0;
};

/// The Hamiltonian matrix of a HamiltonianXY rule (for cross-checks against
/// the closed-form unitary).
Eigen::Matrix4cd hamiltonian_xy_matrix(const HamiltonianXY& h);

/// Closed-form collision unitary on system (x) environment qubit.
Eigen::Matrix4cd collision_unitary(const ElementaryCollision& c);

/// Pauli triple of one collision against a fresh particle in state xi,
/// obtained by honest simulation: partial trace of the joint conjugation,
/// then tomography. Throws NonPauliChannel if xi breaks Pauli diagonality.
PauliTriple elementary_triple(const ElementaryCollision& c, const Matrix& xi);

/// Canonical two-axis elementary map with xi = I/2. Equals
/// (cos g2 tau, cos g1 tau, cos g1 tau cos g2 tau).
PauliTriple elementary_map_xy(double g1, double g2, double tau);

/// n collisions with i.i.d. fresh particles: the induced map composes
/// componentwise, so lambda(k tau) is the k-th componentwise power of the
/// elementary triple. Sampled at collision boundaries t = k tau only.
Trajectory run_factorized(const ElementaryCollision& c, int n);
Trajectory run_factorized(const ElementaryCollision& c, int n,
                          const Matrix& xi);

/// Collision k uses models[pattern[k mod pattern.size()]]; all models must
/// share tau. Realizes weighted sums of generators in the stroboscopic
/// limit (pattern frequencies = weights).
Trajectory run_interleaved(const std::vector<ElementaryCollision>& models,
                           const std::vector<int>& pattern, int n);
Trajectory run_interleaved(const std::vector<ElementaryCollision>& models,
                           const std::vector<int>& pattern, int n,
                           const Matrix& xi);

/// Block-diagonal correlated environment: the induced map is the exact
/// weighted sum of the per-block runs (the cross-block Hamiltonians
/// annihilate each other). Sub-runs must share the time grid.
Trajectory run_block_mixture(const std::vector<double>& weights,
                             const std::vector<Trajectory>& sub_runs);

/// One classically correlated branch pair: the symmetric 1/2-1/2 mixture of
/// a computational-basis bit string and its complement, carrying `weight`
/// in the overall environment state. bits[k] is the control bit of
/// collision k for the primary branch.
struct Branch {
  double weight = 1.0;
  std::vector<std::uint8_t> bits;
};

/// Exact linear-cost simulation of controlled-axis collisions against a
/// branch-correlated environment: per branch the system picks up the
/// deterministic phase (n0-n1) g tau, and the output channel is the weight
/// mixture of the branch conjugations, i.e. a dephasing map along the
/// collision axis with coherence sum_b w_b cos(2 (n0-n1) g tau).
Trajectory run_branch_correlated(const std::vector<Branch>& branches,
                                 const ControlledAxis& collision, double tau,
                                 int n);

/// g = sqrt(2 gamma / tau): the coupling for which n = t/tau collisions
/// converge to the rate-gamma semigroup as tau -> 0.
double stroboscopic_coupling(double gamma, double tau);

} // namespace paulidyn
