#pragma once

#include <Eigen/Dense>
#include <complex>

#include "paulidyn/errors.hpp"

namespace paulidyn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

const Eigen::Matrix2cd& pauli(int axis); // sigma_x, sigma_y, sigma_z for 0,1,2
const Eigen::Matrix2cd& pauli_id();

Matrix kron(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& m, double tol = 1e-12);
bool is_unitary(const Matrix& m, double tol = 1e-12);

/// Density operator with validated invariants: Hermitian and unit trace
/// within 1e-12, eigenvalues >= -1e-10.
struct DensityMatrix {
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }

  static DensityMatrix checked(Matrix m);
};

struct UnitaryMatrix {
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }

  static UnitaryMatrix checked(Matrix m);
};

/// exp(-iHt) for Hermitian H, via eigendecomposition.
UnitaryMatrix hermitian_exp(const Matrix& h, double t);

/// Trace out the environment (second tensor factor) of a joint state on
/// H_sys (x) H_env with the system first. Trace is preserved exactly.
Matrix partial_trace_env(const Matrix& joint, int env_dim);
DensityMatrix partial_trace_env(const DensityMatrix& joint, int env_dim);

// Convenience 2x2 states.
Matrix qubit_state(double bx, double by, double bz); // (I + b.sigma)/2
Matrix maximally_mixed(int dim);

} // namespace paulidyn
