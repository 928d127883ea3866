// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace specpol::detail {

// Thin covers over the LAPACKE drivers the solvers need. All matrices are
// column-major (Eigen's default), so storage is passed through directly.

// Eigenvalues of a Hermitian matrix (ascending). The input is taken by value;
// zheev works in place.
Eigen::VectorXd hermitian_eigenvalues(Eigen::MatrixXcd a);

// Hermitian-definite generalized problem a x = lambda b x. On return `a`
// holds the b-orthonormal eigenvectors and `values` the ascending eigenvalues.
void hermitian_definite_generalized(Eigen::MatrixXcd& a, Eigen::MatrixXcd b,
                                    Eigen::VectorXd& values);

// General complex generalized problem a x = (alpha/beta) b x with right
// eigenvectors.
void complex_generalized(Eigen::MatrixXcd a, Eigen::MatrixXcd b,
                         Eigen::VectorXcd& alpha, Eigen::VectorXcd& beta,
                         Eigen::MatrixXcd& right_vectors);

const char* backend_name();

}  // namespace specpol::detail
