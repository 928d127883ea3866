// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <optional>

namespace specpol {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Gram data of a projected operator on a trial subspace:
///   g0[m,k] = (phi_k, phi_m)        mass, positive definite
///   g1[m,k] = (A phi_k, phi_m)      Hermitian for self-adjoint A
///   g2[m,k] = (A phi_k, A phi_m)    present only when second-order spectra
///							          are wanted
/// The quadratic pencil consumes g2 - z (2 g1) + z^2 g0; the factor 2 lives in
/// the solver so that first- and second-order paths share the same g1.
struct GramTriple {
  ComplexMatrix g0;
  ComplexMatrix g1;
  std::optional<ComplexMatrix> g2;

  Eigen::Index dim() const { return g0.rows(); }
};

/// Gram data with 2x2 block structure over the (u, v) components of the ODE
/// system; all u degrees of freedom come first.
struct BlockGramTriple {
  GramTriple gram;
  Eigen::Index u_dim = 0;
  Eigen::Index v_dim = 0;
};

/// max_{m,k} |M[m,k] - conj(M[k,m])|
double hermitian_defect(const ComplexMatrix& m);

}  // namespace specpol
