#pragma once

#include <array>
#include <cmath>

namespace paulidyn {

// Additive tolerance for set-membership decisions (boundary counts as inside).
inline constexpr double kMembershipTol = 1e-12;
// Tolerance for comparisons against simulated data.
inline constexpr double kSimTol = 1e-10;

/// The three Bloch-axis scaling factors of a qubit Pauli channel at one
/// instant. (1,1,1) is the identity map, (0,0,0) the complete depolarizer.
struct PauliTriple {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda3 = 1.0;

  double operator[](int axis) const {
    return axis == 0 ? lambda1 : axis == 1 ? lambda2 : lambda3;
  }
  double& operator[](int axis) {
    return axis == 0 ? lambda1 : axis == 1 ? lambda2 : lambda3;
  }

  // Channel composition: Pauli channels compose componentwise.
  PauliTriple compose(const PauliTriple& o) const {
    return {lambda1 * o.lambda1, lambda2 * o.lambda2, lambda3 * o.lambda3};
  }

  static PauliTriple identity() { return {1.0, 1.0, 1.0}; }
};

/// Probabilities of the four Pauli Kraus operators (I, sigma1..3) of a Pauli
/// channel. The transform row sums normalize q0+q1+q2+q3 to 1 (up to the
/// last rounding bit); all components are nonnegative precisely for CP
/// triples.
struct QVector {
  double q0 = 1.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  double operator[](int j) const {
    return j == 0 ? q0 : j == 1 ? q1 : j == 2 ? q2 : q3;
  }
  bool nonnegative(double tol = kMembershipTol) const {
    return q0 >= -tol && q1 >= -tol && q2 >= -tol && q3 >= -tol;
  }
};

/// Positivity of the map: all |lambda_i| <= 1 (cube membership).
inline bool is_positive(const PauliTriple& t, double tol = kMembershipTol) {
  return std::abs(t.lambda1) <= 1.0 + tol && std::abs(t.lambda2) <= 1.0 + tol &&
         std::abs(t.lambda3) <= 1.0 + tol;
}

/// Complete positivity: 1 +- lambda3 >= |lambda1 +- lambda2| (tetrahedron
/// membership, boundary inside).
inline bool is_cp(const PauliTriple& t, double tol = kMembershipTol) {
  return 1.0 + t.lambda3 + tol >= std::abs(t.lambda1 + t.lambda2) &&
         1.0 - t.lambda3 + tol >= std::abs(t.lambda1 - t.lambda2);
}

inline QVector q_from_lambda(const PauliTriple& t) {
  return {0.25 * (1.0 + t.lambda1 + t.lambda2 + t.lambda3),
          0.25 * (1.0 + t.lambda1 - t.lambda2 - t.lambda3),
          0.25 * (1.0 - t.lambda1 + t.lambda2 - t.lambda3),
          0.25 * (1.0 - t.lambda1 - t.lambda2 + t.lambda3)};
}

inline PauliTriple lambda_from_q(const QVector& q) {
  return {q.q0 + q.q1 - q.q2 - q.q3,
          q.q0 - q.q1 + q.q2 - q.q3,
          q.q0 - q.q1 - q.q2 + q.q3};
}

} // namespace paulidyn
