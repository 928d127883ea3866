// SPDX-License-Identifier: Apache-2.0

#include "specpol/fem.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "specpol/errors.hpp"

namespace specpol::fem {

namespace {

constexpr double kPi = std::numbers::pi;

struct QuadratureRule {
  std::vector<double> points;   // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule via the symmetric tridiagonal Jacobi matrix, mapped from
// [-1, 1] to [0, 1].
QuadratureRule gauss_rule(int n) {
  if (n < 1 || n > 64) throw PreconditionError("gauss rule order out of range");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadratureRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.points[static_cast<std::size_t>(i)] = 0.5 * (es.eigenvalues()(i) + 1.0);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = v0 * v0;  // 2 v0^2 scaled by 1/2
  }
  return rule;
}

void lagrange_shapes(int order, double t, int deriv, double* out) {
  // Equispaced nodes j/order on [0, 1].
  const int n = order + 1;
  for (int j = 0; j < n; ++j) {
    const double tj = static_cast<double>(j) / order;
    if (deriv == 0) {
      double v = 1.0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const double ti = static_cast<double>(i) / order;
        v *= (t - ti) / (tj - ti);
      }
      out[j] = v;
    } else {
      double v = 0.0;
      for (int i = 0; i < n; ++i) {
        if (i == j) continue;
        const double ti = static_cast<double>(i) / order;
        double term = 1.0 / (tj - ti);
        for (int m = 0; m < n; ++m) {
          if (m == j || m == i) continue;
          const double tm = static_cast<double>(m) / order;
          term *= (t - tm) / (tj - tm);
        }
        v += term;
      }
      out[j] = v;
    }
  }
}

void hermite_shapes(double t, int deriv, double* out) {
  switch (deriv) {
    case 0:
      out[0] = 2 * t * t * t - 3 * t * t + 1;
      out[1] = t * t * t - 2 * t * t + t;
      out[2] = -2 * t * t * t + 3 * t * t;
      out[3] = t * t * t - t * t;
      return;
    case 1:
      out[0] = 6 * t * t - 6 * t;
      out[1] = 3 * t * t - 4 * t + 1;
      out[2] = -6 * t * t + 6 * t;
      out[3] = 3 * t * t - 2 * t;
      return;
    case 2:
      out[0] = 12 * t - 6;
      out[1] = 6 * t - 4;
      out[2] = -12 * t + 6;
      out[3] = 6 * t - 2;
      return;
    default:
      throw PreconditionError("hermite shapes support derivatives 0..2");
  }
}

void require_same_mesh(const FemSpace& a, const FemSpace& b) {
  if (a.mesh().n_nodes != b.mesh().n_nodes)
    throw PreconditionError("spaces must share the mesh");
}

}  // namespace

PeriodicMesh make_mesh(int n_nodes) {
  if (n_nodes < 2) throw PreconditionError("mesh needs at least 2 nodes");
  PeriodicMesh mesh;
  mesh.n_nodes = n_nodes;
  mesh.h = 2.0 * kPi / n_nodes;
  mesh.nodes.resize(static_cast<std::size_t>(n_nodes));
  for (int i = 0; i < n_nodes; ++i)
    mesh.nodes[static_cast<std::size_t>(i)] = -kPi + i * mesh.h;
  return mesh;
}

FemSpace::FemSpace(PeriodicMesh mesh, Family family, int order)
    : mesh_(std::move(mesh)), family_(family), order_(order) {
  if (family_ == Family::lagrange) {
    if (order_ < 1 || order_ > 3)
      throw PreconditionError("lagrange order must be 1..3");
    local_dofs_ = order_ + 1;
    dof_count_ = static_cast<Eigen::Index>(mesh_.n_nodes) * order_;
  } else {
    order_ = 3;
    local_dofs_ = 4;
    dof_count_ = 2 * static_cast<Eigen::Index>(mesh_.n_nodes);
  }
}

FemSpace FemSpace::lagrange(const PeriodicMesh& mesh, int order) {
  return FemSpace(mesh, Family::lagrange, order);
}

FemSpace FemSpace::hermite(const PeriodicMesh& mesh) {
  return FemSpace(mesh, Family::hermite, 3);
}

FemSpace FemSpace::make(const PeriodicMesh& mesh, SpaceSpec spec) {
  return spec.family == Family::hermite ? hermite(mesh) : lagrange(mesh, spec.order);
}

int FemSpace::max_derivative() const { return family_ == Family::hermite ? 2 : 1; }

void FemSpace::element_dofs(int element, std::vector<Eigen::Index>& out) const {
  const int n = mesh_.n_nodes;
  const int next = (element + 1) % n;
  out.clear();
  if (family_ == Family::hermite) {
    // value then h-scaled derivative per node; values first in the global layout
    out = {element, n + element, next, n + next};
    return;
  }
  out.push_back(element);
  for (int j = 1; j < order_; ++j)
    out.push_back(n + static_cast<Eigen::Index>(element) * (order_ - 1) + (j - 1));
  out.push_back(next);
}

void FemSpace::local_shapes(double t, int deriv, double* out) const {
  if (deriv < 0 || deriv > max_derivative())
    throw UnsupportedError(
        family_ == Family::lagrange
            ? "second derivatives of C^0 Lagrange elements are not square "
              "integrable; use the Hermite space"
            : "derivative order out of range");
  if (family_ == Family::hermite) {
    hermite_shapes(t, deriv, out);
  } else {
    lagrange_shapes(order_, t, deriv, out);
  }
}

double FemSpace::eval_basis(Eigen::Index dof, double x, int deriv) const {
  if (dof < 0 || dof >= dof_count_) throw PreconditionError("basis index out of range");
  // wrap into [-pi, pi)
  double xr = std::remainder(x + kPi, 2.0 * kPi);
  if (xr < 0) xr += 2.0 * kPi;
  double et = xr / mesh_.h;
  int element = std::min(static_cast<int>(et), mesh_.n_nodes - 1);
  double t = et - element;
  std::vector<Eigen::Index> dofs;
  std::vector<double> vals(static_cast<std::size_t>(local_dofs_));
  double result = 0.0;
  // A node dof is supported on two elements; evaluate on the containing one.
  element_dofs(element, dofs);
  local_shapes(t, deriv, vals.data());
  for (int j = 0; j < local_dofs_; ++j)
    if (dofs[static_cast<std::size_t>(j)] == dof)
      result += vals[static_cast<std::size_t>(j)] / std::pow(mesh_.h, deriv);
  return result;
}

Eigen::MatrixXd gram_block(const FemSpace& row_space, int row_deriv,
                           const FemSpace& col_space, int col_deriv,
                           int gauss_points) {
  require_same_mesh(row_space, col_space);
  if (row_deriv > row_space.max_derivative() || col_deriv > col_space.max_derivative())
    throw UnsupportedError(
        "requested derivative is not square integrable on this element family");
  const QuadratureRule rule = gauss_rule(gauss_points);
  const int nq = gauss_points;
  const int n_elem = row_space.mesh().n_nodes;
  const double h = row_space.mesh().h;
  const int nr = row_space.local_dof_count();
  const int nc = col_space.local_dof_count();

  // Reference shapes at the quadrature points.
  Eigen::MatrixXd rshape(nr, nq), cshape(nc, nq);
  for (int q = 0; q < nq; ++q) {
    row_space.local_shapes(rule.points[static_cast<std::size_t>(q)], row_deriv,
                           rshape.col(q).data());
    col_space.local_shapes(rule.points[static_cast<std::size_t>(q)], col_deriv,
                           cshape.col(q).data());
  }
  // dx = h dt and each x-derivative contributes 1/h.
  const double scale = h / std::pow(h, row_deriv + col_deriv);
  Eigen::MatrixXd local = Eigen::MatrixXd::Zero(nr, nc);
  for (int q = 0; q < nq; ++q)
    local += rule.weights[static_cast<std::size_t>(q)] * rshape.col(q) *
             cshape.col(q).transpose();
  local *= scale;

  Eigen::MatrixXd global = Eigen::MatrixXd::Zero(row_space.dof_count(),
                                                 col_space.dof_count());
  std::vector<Eigen::Index> rdofs, cdofs;
  for (int e = 0; e < n_elem; ++e) {
    row_space.element_dofs(e, rdofs);
    col_space.element_dofs(e, cdofs);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j)
        global(rdofs[static_cast<std::size_t>(i)], cdofs[static_cast<std::size_t>(j)]) +=
            local(i, j);
  }
  return global;
}

BlockGramTriple assemble_stokes_first_order(const FemSpace& space_u,
                                            const FemSpace& space_v) {
  require_same_mesh(space_u, space_v);
  const Eigen::Index nu = space_u.dof_count();
  const Eigen::Index nv = space_v.dof_count();
  const Eigen::MatrixXd stiff_u = gram_block(space_u, 1, space_u, 1);
  const Eigen::MatrixXd coupling = gram_block(space_u, 1, space_v, 0);
  const Eigen::MatrixXd mass_u = gram_block(space_u, 0, space_u, 0);
  const Eigen::MatrixXd mass_v = gram_block(space_v, 0, space_v, 0);

  Eigen::MatrixXd g1 = Eigen::MatrixXd::Zero(nu + nv, nu + nv);
  g1.topLeftCorner(nu, nu) = stiff_u;
  g1.topRightCorner(nu, nv) = coupling;
  g1.bottomLeftCorner(nv, nu) = coupling.transpose();
  g1.bottomRightCorner(nv, nv) = 2.0 * mass_v;

  Eigen::MatrixXd g0 = Eigen::MatrixXd::Zero(nu + nv, nu + nv);
  g0.topLeftCorner(nu, nu) = mass_u;
  g0.bottomRightCorner(nv, nv) = mass_v;

  BlockGramTriple block;
  block.gram.g0 = g0.cast<std::complex<double>>();
  block.gram.g1 = g1.cast<std::complex<double>>();
  block.u_dim = nu;
  block.v_dim = nv;
  return block;
}

BlockGramTriple assemble_stokes_second_order(const FemSpace& space_u,
                                             const FemSpace& space_v) {
  if (space_u.family() != Family::hermite)
    throw UnsupportedError(
        "second-order assembly needs square-integrable u'' ; use the Hermite "
        "space for the first component");
  BlockGramTriple block = assemble_stokes_first_order(space_u, space_v);
  const Eigen::Index nu = block.u_dim;
  const Eigen::Index nv = block.v_dim;

  // H(psi, 0) = (-psi'', psi') and H(0, phi) = (-phi', 2 phi).
  const Eigen::MatrixXd uu =
      gram_block(space_u, 2, space_u, 2) + gram_block(space_u, 1, space_u, 1);
  const Eigen::MatrixXd uv =
      gram_block(space_u, 2, space_v, 1) + 2.0 * gram_block(space_u, 1, space_v, 0);
  const Eigen::MatrixXd vv =
      gram_block(space_v, 1, space_v, 1) + 4.0 * gram_block(space_v, 0, space_v, 0);

  Eigen::MatrixXd g2 = Eigen::MatrixXd::Zero(nu + nv, nu + nv);
  g2.topLeftCorner(nu, nu) = uu;
  g2.topRightCorner(nu, nv) = uv;
  g2.bottomLeftCorner(nv, nu) = uv.transpose();
  g2.bottomRightCorner(nv, nv) = vv;
  block.gram.g2 = g2.cast<std::complex<double>>();
  return block;
}

SchurComparison schur_reduction_compare(const FemSpace& space_u,
                                        const FemSpace& space_v,
                                        const std::vector<double>& lambda_grid) {
  require_same_mesh(space_u, space_v);
  for (double lambda : lambda_grid)
    if (std::abs(lambda - 2.0) < 1e-9)
      throw PreconditionError("the reduction divides by lambda - 2");

  const Eigen::MatrixXd stiff = gram_block(space_u, 1, space_u, 1);
  const Eigen::MatrixXd cross = gram_block(space_v, 0, space_u, 1);  // (psi'_k, phi_j)
  const Eigen::MatrixXd mass_v = gram_block(space_v, 0, space_v, 0);

  // (P_1 psi'_m, P_1 psi'_k) = cross^T mass_v^{-1} cross
  Eigen::LLT<Eigen::MatrixXd> llt(mass_v);
  if (llt.info() != Eigen::Success)
    throw SolverError("v-space mass matrix is not positive definite");
  const Eigen::MatrixXd projected = cross.transpose() * llt.solve(cross);

  SchurComparison cmp;
  cmp.static_defect = (projected - stiff).norm();
  cmp.derivative_space_contained =
      cmp.static_defect <= 1e-12 * std::max(1.0, stiff.norm());
  cmp.lambdas = lambda_grid;
  cmp.diffs.reserve(lambda_grid.size());
  for (double lambda : lambda_grid)
    cmp.diffs.push_back(cmp.static_defect / std::abs(lambda - 2.0));
  return cmp;
}

}  // namespace specpol::fem
