#include "paulidyn/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace paulidyn {

namespace {

Eigen::Matrix2cd make_pauli(int axis) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (axis) {
  case 0:
    m << 0, 1, 1, 0;
    break;
  case 1:
    m << 0, -i, i, 0;
    break;
  default:
    m << 1, 0, 0, -1;
    break;
  }
  return m;
}

} // namespace

const Eigen::Matrix2cd& pauli(int axis) {
  static const Eigen::Matrix2cd sx = make_pauli(0);
  static const Eigen::Matrix2cd sy = make_pauli(1);
  static const Eigen::Matrix2cd sz = make_pauli(2);
  if (axis < 0 || axis > 2)
    throw DimensionError("pauli axis must be 0, 1 or 2");
  return axis == 0 ? sx : axis == 1 ? sy : sz;
}

const Eigen::Matrix2cd& pauli_id() {
  static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return id;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    return false;
  Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix DensityMatrix::checked(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw DimensionError("density matrix must be square with dim >= 2");
  if (!is_hermitian(m, 1e-12))
    throw ValidationError("density matrix is not Hermitian within 1e-12");
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-12)
    throw ValidationError("density matrix trace differs from 1 by > 1e-12");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw ValidationError("density matrix has eigenvalue < -1e-10");
  return DensityMatrix{std::move(m)};
}

UnitaryMatrix UnitaryMatrix::checked(Matrix m) {
  if (!is_unitary(m, 1e-12))
    throw ValidationError("matrix is not unitary within 1e-12");
  return UnitaryMatrix{std::move(m)};
}

UnitaryMatrix hermitian_exp(const Matrix& h, double t) {
  if (h.rows() != h.cols())
    throw DimensionError("hermitian_exp requires a square matrix");
  if (!is_hermitian(h, 1e-12))
    throw ValidationError("hermitian_exp input is not Hermitian within 1e-12");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -w(i) * t));
  Matrix u = v * phases.asDiagonal() * v.adjoint();
  return UnitaryMatrix{std::move(u)};
}

Matrix partial_trace_env(const Matrix& joint, int env_dim) {
  if (joint.rows() != joint.cols())
    throw DimensionError("partial trace input must be square");
  if (env_dim <= 0 || joint.rows() % env_dim != 0)
    throw DimensionError("joint dimension is not divisible by env dimension");
  const Eigen::Index sys = joint.rows() / env_dim;
  Matrix out = Matrix::Zero(sys, sys);
  for (Eigen::Index a = 0; a < sys; ++a)
    for (Eigen::Index b = 0; b < sys; ++b) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index e = 0; e < env_dim; ++e)
        acc += joint(a * env_dim + e, b * env_dim + e);
      out(a, b) = acc;
    }
  return out;
}

DensityMatrix partial_trace_env(const DensityMatrix& joint, int env_dim) {
  return DensityMatrix{partial_trace_env(joint.mat, env_dim)};
}

Matrix qubit_state(double bx, double by, double bz) {
  Matrix m = 0.5 * (pauli_id() + bx * pauli(0) + by * pauli(1) + bz * pauli(2));
  return m;
}

Matrix maximally_mixed(int dim) {
  return Matrix::Identity(dim, dim) / static_cast<double>(dim);
}

} // namespace paulidyn
