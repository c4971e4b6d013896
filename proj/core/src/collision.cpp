#include "paulidyn/collision.hpp"

#include <cmath>

#include "paulidyn/channel.hpp"

namespace paulidyn {

namespace {

int third_axis(int a, int b) { return 3 - a - b; }

Eigen::Matrix2cd axis_rotation(int axis, double theta) {
  // e^{i theta sigma_axis}
  return std::cos(theta) * pauli_id() +
         Complex(0.0, 1.0) * std::sin(theta) * pauli(axis);
}

} // namespace

Eigen::Matrix4cd hamiltonian_xy_matrix(const HamiltonianXY& h) {
  if (h.axis_a == h.axis_b || h.axis_a < 0 || h.axis_a > 2 || h.axis_b < 0 ||
      h.axis_b > 2)
    throw ValidationError("pairwise Hamiltonian needs two distinct axes");
  Matrix m =
      0.5 * h.g1 * kron(pauli(h.axis_a), pauli(h.axis_a)) +
      0.5 * h.g2 * kron(pauli(h.axis_b), pauli(h.axis_b));
  return Eigen::Matrix4cd(m);
}

Eigen::Matrix4cd collision_unitary(const ElementaryCollision& c) {
  if (!(c.tau > 0.0))
    throw ValidationError("collision duration tau must be > 0");
  if (std::holds_alternative<HamiltonianXY>(c.kind)) {
    const auto& h = std::get<HamiltonianXY>(c.kind);
    if (h.axis_a == h.axis_b || h.axis_a < 0 || h.axis_a > 2 || h.axis_b < 0 ||
        h.axis_b > 2)
      throw ValidationError("pairwise Hamiltonian needs two distinct axes");
    // The two terms commute, so exp factorizes into the four-term closed
    // form with half angles.
    const double c1 = std::cos(0.5 * h.g1 * c.tau);
    const double s1 = std::sin(0.5 * h.g1 * c.tau);
    const double c2 = std::cos(0.5 * h.g2 * c.tau);
    const double s2 = std::sin(0.5 * h.g2 * c.tau);
    const int axc = third_axis(h.axis_a, h.axis_b);
    const Complex mi(0.0, -1.0);
    Matrix u = c1 * c2 * kron(pauli_id(), pauli_id()) +
               mi * s1 * c2 * kron(pauli(h.axis_a), pauli(h.axis_a)) +
               mi * c1 * s2 * kron(pauli(h.axis_b), pauli(h.axis_b)) +
               s1 * s2 * kron(pauli(axc), pauli(axc));
    return Eigen::Matrix4cd(u);
  }
  const auto& ctl = std::get<ControlledAxis>(c.kind);
  if (ctl.axis < 0 || ctl.axis > 2)
    throw ValidationError("controlled collision axis must be 0, 1 or 2");
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd up = axis_rotation(ctl.axis, ctl.g * c.tau);
  const Eigen::Matrix2cd dn = axis_rotation(ctl.axis, -ctl.g * c.tau);
  // System (x) environment ordering: env computational basis labels blocks.
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp) {
      u(2 * s + 0, 2 * sp + 0) = up(s, sp);
      u(2 * s + 1, 2 * sp + 1) = dn(s, sp);
    }
  return u;
}

PauliTriple elementary_triple(const ElementaryCollision& c, const Matrix& xi) {
  if (xi.rows() != 2 || xi.cols() != 2)
    throw DimensionError("environment particle state must be 2x2");
  const Eigen::Matrix4cd u = collision_unitary(c);
  Channel channel = [&u, &xi](const Matrix& rho) {
    Matrix joint = kron(rho, xi);
    Matrix evolved = u * joint * u.adjoint();
    return partial_trace_env(evolved, 2);
  };
  return tomography(channel);
}

PauliTriple elementary_map_xy(double g1, double g2, double tau) {
  ElementaryCollision c{HamiltonianXY{g1, g2, 0, 1}, tau};
  return elementary_triple(c, maximally_mixed(2));
}

Trajectory run_factorized(const ElementaryCollision& c, int n,
                          const Matrix& xi) {
  if (n < 0)
    throw ValidationError("collision count must be >= 0");
  const PauliTriple step = elementary_triple(c, xi);
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<PauliTriple> samples(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  samples[0] = PauliTriple::identity();
  for (int k = 1; k <= n; ++k) {
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) * c.tau;
    samples[static_cast<std::size_t>(k)] =
        samples[static_cast<std::size_t>(k) - 1].compose(step);
  }
  return Trajectory{std::move(times), std::move(samples)};
}

Trajectory run_factorized(const ElementaryCollision& c, int n) {
  return run_factorized(c, n, maximally_mixed(2));
}

Trajectory run_interleaved(const std::vector<ElementaryCollision>& models,
                           const std::vector<int>& pattern, int n,
                           const Matrix& xi) {
  if (models.empty() || pattern.empty())
    throw ValidationError("interleaved run needs models and a pattern");
  if (n < 0)
    throw ValidationError("collision count must be >= 0");
  const double tau = models.front().tau;
  std::vector<PauliTriple> steps;
  steps.reserve(models.size());
  for (const auto& m : models) {
    if (std::abs(m.tau - tau) > 0.0)
      throw ValidationError("interleaved models must share tau");
    steps.push_back(elementary_triple(m, xi));
  }
  for (int idx : pattern)
    if (idx < 0 || static_cast<std::size_t>(idx) >= models.size())
      throw ValidationError("pattern references a missing model");

  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<PauliTriple> samples(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  samples[0] = PauliTriple::identity();
  for (int k = 1; k <= n; ++k) {
    const auto& step =
        steps[static_cast<std::size_t>(pattern[(k - 1) % pattern.size()])];
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) * tau;
    samples[static_cast<std::size_t>(k)] =
        samples[static_cast<std::size_t>(k) - 1].compose(step);
  }
  return Trajectory{std::move(times), std::move(samples)};
}

Trajectory run_interleaved(const std::vector<ElementaryCollision>& models,
                           const std::vector<int>& pattern, int n) {
  return run_interleaved(models, pattern, n, maximally_mixed(2));
}

Trajectory run_block_mixture(const std::vector<double>& weights,
                             const std::vector<Trajectory>& sub_runs) {
  if (weights.empty() || weights.size() != sub_runs.size())
    throw ValidationError("block mixture needs matching weights and runs");
  double wsum = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw ValidationError("block weights must be nonnegative");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw ValidationError("block weights must sum to 1 within 1e-12");

  const Trajectory& first = sub_runs.front();
  for (const auto& r : sub_runs) {
    if (r.size() != first.size())
      throw ValidationError("block sub-runs must share the time grid");
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r.times[k] != first.times[k])
        throw ValidationError("block sub-runs must share the time grid");
  }

  std::vector<PauliTriple> samples(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    PauliTriple acc{0.0, 0.0, 0.0};
    for (std::size_t m = 0; m < sub_runs.size(); ++m)
      for (int a = 0; a < 3; ++a)
        acc[a] += weights[m] * sub_runs[m].samples[k][a];
    samples[k] = acc;
  }
  return Trajectory{first.times, std::move(samples)};
}

Trajectory run_branch_correlated(const std::vector<Branch>& branches,
                                 const ControlledAxis& collision, double tau,
                                 int n) {
  if (!(tau > 0.0))
    throw ValidationError("collision duration tau must be > 0");
  if (n < 0)
    throw ValidationError("collision count must be >= 0");
  if (branches.empty())
    throw ValidationError("branch-correlated run needs at least one branch");
  double wsum = 0.0;
  for (const auto& b : branches) {
    if (b.weight < 0.0)
      throw ValidationError("branch weights must be nonnegative");
    if (b.bits.size() < static_cast<std::size_t>(n))
      throw ValidationError("branch bit string shorter than the run");
    wsum += b.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw ValidationError("branch weights must sum to 1 within 1e-12");
  if (collision.axis < 0 || collision.axis > 2)
    throw ValidationError("controlled collision axis must be 0, 1 or 2");

  // Each branch contributes the deterministic phase m_k = n0 - n1; the
  // mixture over the symmetric branch pairs is a dephasing map along the
  // collision axis with coherence sum_b w_b cos(2 m_k g tau).
  std::vector<long long> m(branches.size(), 0);
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<PauliTriple> samples(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  samples[0] = PauliTriple::identity();
  for (int k = 1; k <= n; ++k) {
    double coherence = 0.0;
    for (std::size_t b = 0; b < branches.size(); ++b) {
      m[b] += branches[b].bits[static_cast<std::size_t>(k - 1)] == 0 ? 1 : -1;
      coherence += branches[b].weight *
                   std::cos(2.0 * static_cast<double>(m[b]) * collision.g * tau);
    }
    PauliTriple l{coherence, coherence, coherence};
    l[collision.axis] = 1.0;
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) * tau;
    samples[static_cast<std::size_t>(k)] = l;
  }
  return Trajectory{std::move(times), std::move(samples)};
}

double stroboscopic_coupling(double gamma, double tau) {
  if (gamma < 0.0)
    throw ValidationError("rate gamma must be >= 0");
  if (!(tau > 0.0))
    throw ValidationError("collision duration tau must be > 0");
  return std::sqrt(2.0 * gamma / tau);
}

} // namespace paulidyn
