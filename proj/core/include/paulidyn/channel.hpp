#pragma once

#include <functional>

#include "paulidyn/linalg.hpp"
#include "paulidyn/triple.hpp"

namespace paulidyn {

/// A qubit channel given only through its action on density matrices.
using Channel = std::function<Matrix(const Matrix&)>;

/// rho -> (tr[rho] I + sum_j lambda_j tr[sigma_j rho] sigma_j) / 2.
/// Trace preserving by construction.
Matrix apply_pauli_channel(const PauliTriple& t, const Matrix& rho);

/// Recover the Pauli triple of a Pauli-diagonal channel by probing it on
/// {I/2, (I+sigma_j)/2} and reading Pauli overlaps. Throws NonPauliChannel
/// when any cross overlap exceeds 1e-10 (the channel is then outside this
/// module's scope: non-unital or not diagonal in the Pauli basis).
PauliTriple tomography(const Channel& channel);

} // namespace paulidyn
