#include "paulidyn/channel.hpp"

#include <algorithm>
#include <cmath>

namespace paulidyn {

Matrix apply_pauli_channel(const PauliTriple& t, const Matrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw DimensionError("Pauli channel acts on 2x2 density matrices");
  Matrix out = 0.5 * rho.trace() * Matrix(pauli_id());
  for (int j = 0; j < 3; ++j)
    out += 0.5 * t[j] * (pauli(j) * rho).trace() * pauli(j);
  return out;
}

PauliTriple tomography(const Channel& channel) {
  const Matrix half = maximally_mixed(2);
  const Matrix r0 = channel(half);

  // channel(sigma_j) by linear extension from the probe states (I+sigma_j)/2.
  std::array<Matrix, 3> img;
  for (int j = 0; j < 3; ++j) {
    Matrix probe = half + 0.5 * pauli(j);
    img[j] = 2.0 * (channel(probe) - r0);
  }

  double deviation = 0.0;
  // Unitality: channel(I) must have no Pauli components and full trace.
  for (int i = 0; i < 3; ++i)
    deviation = std::max(deviation, std::abs((pauli(i) * r0).trace()) * 2.0);
  deviation = std::max(deviation, std::abs(r0.trace() * 2.0 - 1.0 * 2.0));
  // Pauli images: no identity part, no cross components.
  for (int j = 0; j < 3; ++j) {
    deviation = std::max(deviation, 0.5 * std::abs(img[j].trace()));
    for (int i = 0; i < 3; ++i) {
      if (i == j)
        continue;
      deviation =
          std::max(deviation, 0.5 * std::abs((pauli(i) * img[j]).trace()));
    }
  }
  if (deviation > 1e-10)
    throw NonPauliChannel(deviation);

  PauliTriple t;
  for (int j = 0; j < 3; ++j)
    t[j] = 0.5 * (pauli(j) * img[j]).trace().real();
  return t;
}

} // namespace paulidyn
