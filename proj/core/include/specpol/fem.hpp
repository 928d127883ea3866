// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "specpol/gram.hpp"

namespace specpol::fem {

/// Uniform mesh of [-pi, pi] with node 0 identified with node n_nodes.
struct PeriodicMesh {
  int n_nodes = 0;
  double h = 0.0;
  std::vector<double> nodes;
};

PeriodicMesh make_mesh(int n_nodes);

enum class Family { lagrange, hermite };

struct SpaceSpec {
  Family family = Family::lagrange;
  int order = 1;  // polynomial degree for Lagrange; Hermite is always cubic
};

/// Periodic scalar finite element space on a uniform mesh. Lagrange spaces of
/// order p are C^0 piecewise degree-p polynomials with N*p degrees of freedom;
/// the Hermite space is C^1 piecewise cubics with 2N degrees of freedom (value
/// and h-scaled derivative per node, so conditioning stays mesh-uniform).
class FemSpace {
 public:
  static FemSpace lagrange(const PeriodicMesh& mesh, int order);
  static FemSpace hermite(const PeriodicMesh& mesh);
  static FemSpace make(const PeriodicMesh& mesh, SpaceSpec spec);

  const PeriodicMesh& mesh() const { return mesh_; }
  Family family() const { return family_; }
  int order() const { return order_; }
  Eigen::Index dof_count() const { return dof_count_; }
  int local_dof_count() const { return local_dofs_; }
  /// Highest derivative that stays square integrable: 1 for Lagrange, 2 for
  /// Hermite.
  int max_derivative() const;

  /// Global indices of the local basis functions on element e.
  void element_dofs(int element, std::vector<Eigen::Index>& out) const;

  /// Reference-element shapes d^deriv/dt^deriv at t in [0, 1], one value per
  /// local degree of freedom. Physical derivatives carry a factor h^-deriv.
  void local_shapes(double t, int deriv, double* out) const;

  /// Global basis function value at x (derivative `deriv` w.r.t. x); intended
  /// for verification quadrature, not assembly.
  double eval_basis(Eigen::Index dof, double x, int deriv) const;

 private:
  FemSpace(PeriodicMesh mesh, Family family, int order);

  PeriodicMesh mesh_;
  Family family_;
  int order_;
  int local_dofs_;
  Eigen::Index dof_count_;
};

/// Matrix of (d^col_deriv phi_k, d^row_deriv psi_m) over the common mesh,
/// integrated per element with Gauss quadrature. The default 4-point rule is
/// exact for every product of the supported families (integrand degree <= 6).
/// Asking for derivatives beyond max_derivative() throws UnsupportedError.
Eigen::MatrixXd gram_block(const FemSpace& row_space, int row_deriv,
                           const FemSpace& col_space, int col_deriv,
                           int gauss_points = 4);

/// Weak-form Gram data of the system
///   ( -u'' - v', u' + 2v )
/// on space_u x space_v after periodic integration by parts:
///   g1 = [ (psi'_k, psi'_m)   (phi_j, psi'_m) ;  adjoint   2 (phi_j, phi_i) ]
///   g0 = diag(mass_u, mass_v)
BlockGramTriple assemble_stokes_first_order(const FemSpace& space_u,
                                            const FemSpace& space_v);

/// Adds g2[w_k, w_m] = (H w_k, H w_m) with H w expanded per component; needs
/// square-integrable second derivatives on the u side, i.e. the Hermite space.
BlockGramTriple assemble_stokes_second_order(const FemSpace& space_u,
                                             const FemSpace& space_v);

/// Comparison of the two Schur reductions of the block system to a u-only
/// problem: the exact elimination uses the projected derivative Gram
/// (P_1 psi'_m, P_1 psi'_k) while the unpolluted reference uses the plain
/// (psi'_m, psi'_k). Their difference is the lambda-independent defect matrix
/// scaled by 1/(lambda - 2).
struct SchurComparison {
  std::vector<double> lambdas;
  std::vector<double> diffs;         // Frobenius norm of R3(lambda) - R5(lambda)
  double static_defect = 0.0;        // Frobenius norm of the defect matrix
  bool derivative_space_contained = false;
};

SchurComparison schur_reduction_compare(const FemSpace& space_u,
                                        const FemSpace& space_v,
                                        const std::vector<double>& lambda_grid);

}  // namespace specpol::fem
