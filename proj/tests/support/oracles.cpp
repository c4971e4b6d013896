#include "oracles.hpp"

#include <cmath>

namespace paulidyn::testing {

JointSim::JointSim(const Matrix& rho_sys, const Matrix& env, int particle_dim,
                   int n_particles)
    : d_(particle_dim), n_(n_particles) {
  env_dim_ = 1;
  for (int i = 0; i < n_; ++i)
    env_dim_ *= d_;
  if (env.rows() != env_dim_ || env.cols() != env_dim_)
    throw DimensionError("environment state has the wrong dimension");
  state_ = kron(rho_sys, env);
}

void JointSim::collide(const Matrix& u_pair, int particle) {
  if (particle < 0 || particle >= n_)
    throw DimensionError("collision particle index out of range");
  if (u_pair.rows() != 2 * d_ || u_pair.cols() != 2 * d_)
    throw DimensionError("pair unitary has the wrong dimension");

  const Eigen::Index dim = state_.rows();
  Eigen::Index stride = 1;
  for (int i = particle + 1; i < n_; ++i)
    stride *= d_;
  const Eigen::Index outer = env_dim_ / (stride * d_);
  const int p = 2 * d_;

  // Row index r = s*env + hi*stride*d + ek*stride + lo; the pair index is
  // (s, ek). Gather/scatter keeps the cost at O(dim^2 * d) per pass.
  auto row_of = [&](int s, int ek, Eigen::Index hi, Eigen::Index lo) {
    return s * env_dim_ + hi * stride * d_ + ek * stride + lo;
  };

  Matrix tmp(dim, dim);
  std::vector<Complex> vec(static_cast<std::size_t>(p));
  for (Eigen::Index c = 0; c < dim; ++c)
    for (Eigen::Index hi = 0; hi < outer; ++hi)
      for (Eigen::Index lo = 0; lo < stride; ++lo) {
        for (int s = 0; s < 2; ++s)
          for (int ek = 0; ek < d_; ++ek)
            vec[static_cast<std::size_t>(s * d_ + ek)] =
                state_(row_of(s, ek, hi, lo), c);
        for (int a = 0; a < p; ++a) {
          Complex acc(0.0, 0.0);
          for (int b = 0; b < p; ++b)
            acc += u_pair(a, b) * vec[static_cast<std::size_t>(b)];
          tmp(row_of(a / d_, a % d_, hi, lo), c) = acc;
        }
      }

  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index hi = 0; hi < outer; ++hi)
      for (Eigen::Index lo = 0; lo < stride; ++lo) {
        for (int s = 0; s < 2; ++s)
          for (int ek = 0; ek < d_; ++ek)
            vec[static_cast<std::size_t>(s * d_ + ek)] =
                tmp(r, row_of(s, ek, hi, lo));
        for (int a = 0; a < p; ++a) {
          Complex acc(0.0, 0.0);
          for (int b = 0; b < p; ++b)
            acc += vec[static_cast<std::size_t>(b)] * std::conj(u_pair(a, b));
          out(r, row_of(a / d_, a % d_, hi, lo)) = acc;
        }
      }
  state_.swap(out);
}

Matrix JointSim::system_state() const {
  return partial_trace_env(state_, static_cast<int>(env_dim_));
}

Matrix controlled_pair_unitary_axis(int axis, double g, double tau) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd up = std::cos(g * tau) * pauli_id() +
                        i * std::sin(g * tau) * pauli(axis);
  Eigen::Matrix2cd dn = std::cos(g * tau) * pauli_id() -
                        i * std::sin(g * tau) * pauli(axis);
  Matrix u = Matrix::Zero(4, 4);
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp) {
      u(2 * s + 0, 2 * sp + 0) = up(s, sp);
      u(2 * s + 1, 2 * sp + 1) = dn(s, sp);
    }
  return u;
}

Matrix controlled_pair_unitary(double g, double tau, int particle_dim) {
  if (particle_dim == 2)
    return controlled_pair_unitary_axis(2, g, tau);
  if (particle_dim != 6)
    throw DimensionError("controlled pair unitary supports d = 2 or 6");
  const Complex i(0.0, 1.0);
  Matrix u = Matrix::Zero(12, 12);
  for (int m = 0; m < 3; ++m) {
    Eigen::Matrix2cd up = std::cos(g * tau) * pauli_id() +
                          i * std::sin(g * tau) * pauli(m);
    Eigen::Matrix2cd dn = std::cos(g * tau) * pauli_id() -
                          i * std::sin(g * tau) * pauli(m);
    for (int s = 0; s < 2; ++s)
      for (int sp = 0; sp < 2; ++sp) {
        u(6 * s + 2 * m + 0, 6 * sp + 2 * m + 0) = up(s, sp);
        u(6 * s + 2 * m + 1, 6 * sp + 2 * m + 1) = dn(s, sp);
      }
  }
  return u;
}

Matrix kron_power(const Matrix& m, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < n; ++i)
    out = kron(out, m);
  return out;
}

Matrix branch_pair_env(const std::vector<std::uint8_t>& bits) {
  const int n = static_cast<int>(bits.size());
  Matrix b0 = Matrix::Identity(1, 1);
  Matrix b1 = Matrix::Identity(1, 1);
  Matrix p0 = Matrix::Zero(2, 2);
  Matrix p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  for (int k = 0; k < n; ++k) {
    b0 = kron(b0, bits[static_cast<std::size_t>(k)] == 0 ? p0 : p1);
    b1 = kron(b1, bits[static_cast<std::size_t>(k)] == 0 ? p1 : p0);
  }
  return 0.5 * (b0 + b1);
}

PauliTriple random_cube_triple(Rng& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
          rng.uniform(-1.0, 1.0)};
}

PauliTriple random_cp_triple(Rng& rng) {
  for (;;) {
    PauliTriple t = random_cube_triple(rng);
    if (is_cp(t, 0.0))
      return t;
  }
}

Matrix random_pure_state(Rng& rng) {
  // Uniform direction on the Bloch sphere.
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * 3.141592653589793);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return qubit_state(r * std::cos(phi), r * std::sin(phi), z);
}

Matrix random_mixed_state(Rng& rng, double max_radius) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * 3.141592653589793);
  const double rad = max_radius * std::cbrt(rng.uniform());
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return qubit_state(rad * r * std::cos(phi), rad * r * std::sin(phi),
                     rad * z);
}

} // namespace paulidyn::testing
