#pragma once

#include <Eigen/Dense>

#include "xylab/pauli.hpp"

namespace xylab {

/// Largest qubit count for which dense 2^n x 2^n matrices are materialized.
inline constexpr int kDenseLimit = 10;

using DenseMatrix = Eigen::MatrixXcd;

/// Dense matrix of the signed Pauli string.  Basis-state index convention:
/// bit q-1 of the index is the computational value of (1-based) qubit q.
DenseMatrix to_dense(const PauliString& p);

/// Dense matrix of a LieElement (sum of c * i * W terms).  Test oracle only.
/// Throws capacity_error when n exceeds `limit`.
DenseMatrix to_dense(const LieElement& a, int limit = kDenseLimit);

}  // namespace xylab
