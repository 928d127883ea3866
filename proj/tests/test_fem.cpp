// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "specpol/eig.hpp"
#include "specpol/errors.hpp"
#include "specpol/fem.hpp"
#include "specpol/models.hpp"
#include "support/oracles.hpp"

using namespace specpol;
using fem::FemSpace;
using fem::Family;

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive quadrature of (d^db b, d^da a) with element-aligned panels, via the
// public pointwise basis evaluation. Independent of the Gauss assembly loop.
double pair_integral_oracle(const FemSpace& row, Eigen::Index i, int di,
                            const FemSpace& col, Eigen::Index j, int dj) {
  const auto& mesh = row.mesh();
  double total = 0.0;
  for (int e = 0; e < mesh.n_nodes; ++e) {
    const double a = mesh.nodes[static_cast<std::size_t>(e)];
    const double b = a + mesh.h;
    total += oracle::integrate(
        [&](double x) { return row.eval_basis(i, x, di) * col.eval_basis(j, x, dj); },
        a + 1e-13, b - 1e-13, 1e-14);
  }
  return total;
}

int count_in(const std::vector<double>& vals, double lo, double hi) {
  int n = 0;
  for (double v : vals)
    if (v >= lo && v <= hi) ++n;
  return n;
}

}  // namespace

TEST_CASE("mesh layout") {
  const fem::PeriodicMesh mesh = fem::make_mesh(8);
  CHECK(mesh.h == doctest::Approx(kPi / 4));
  CHECK(mesh.nodes.front() == doctest::Approx(-kPi));
  CHECK(mesh.nodes.back() == doctest::Approx(kPi - mesh.h));
}

TEST_CASE("dof counts") {
  const fem::PeriodicMesh mesh = fem::make_mesh(10);
  CHECK(FemSpace::lagrange(mesh, 1).dof_count() == 10);
  CHECK(FemSpace::lagrange(mesh, 3).dof_count() == 30);
  CHECK(FemSpace::hermite(mesh).dof_count() == 20);
}

TEST_CASE("partition of unity: mass row sums and stiffness kernel") {
  const fem::PeriodicMesh mesh = fem::make_mesh(12);
  const FemSpace space = FemSpace::lagrange(mesh, 1);
  const Eigen::MatrixXd mass = fem::gram_block(space, 0, space, 0);
  const Eigen::VectorXd row_sums = mass.rowwise().sum();
  for (Eigen::Index i = 0; i < row_sums.size(); ++i)
    CHECK(row_sums(i) == doctest::Approx(mesh.h).epsilon(1e-13));

  const Eigen::MatrixXd stiff = fem::gram_block(space, 1, space, 1);
  CHECK((stiff * Eigen::VectorXd::Ones(space.dof_count())).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("hermite mass matrix against adaptive quadrature") {
  const fem::PeriodicMesh mesh = fem::make_mesh(4);
  const FemSpace space = FemSpace::hermite(mesh);
  const Eigen::MatrixXd mass = fem::gram_block(space, 0, space, 0);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < space.dof_count(); ++i)
    for (Eigen::Index j = 0; j < space.dof_count(); ++j)
      worst = std::max(worst,
                       std::abs(mass(i, j) - pair_integral_oracle(space, i, 0, space, j, 0)));
  CHECK(worst < 1e-12);
}

TEST_CASE("quadrature exactness: doubling the Gauss order changes nothing") {
  const fem::PeriodicMesh mesh = fem::make_mesh(6);
  const FemSpace hermite = FemSpace::hermite(mesh);
  const FemSpace quad = FemSpace::lagrange(mesh, 2);
  for (int deriv_row : {0, 1}) {
    for (int deriv_col : {0, 1}) {
      const Eigen::MatrixXd four = fem::gram_block(hermite, deriv_row, quad, deriv_col, 4);
      const Eigen::MatrixXd eight = fem::gram_block(hermite, deriv_row, quad, deriv_col, 8);
      CHECK((four - eight).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
  const Eigen::MatrixXd four = fem::gram_block(hermite, 2, hermite, 2, 4);
  const Eigen::MatrixXd eight = fem::gram_block(hermite, 2, hermite, 2, 8);
  CHECK((four - eight).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("second derivatives of C0 spaces are rejected") {
  const fem::PeriodicMesh mesh = fem::make_mesh(6);
  const FemSpace linear = FemSpace::lagrange(mesh, 1);
  CHECK_THROWS_AS(fem::gram_block(linear, 2, linear, 0), UnsupportedError);
  CHECK_THROWS_AS(fem::assemble_stokes_second_order(linear, linear), UnsupportedError);
}

TEST_CASE("mass matrices are positive definite") {
  const fem::PeriodicMesh mesh = fem::make_mesh(9);
  for (const FemSpace& space : {FemSpace::lagrange(mesh, 1), FemSpace::lagrange(mesh, 3),
                                FemSpace::hermite(mesh)}) {
    const Eigen::MatrixXd mass = fem::gram_block(space, 0, space, 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mass);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("first-order block system basics") {
  const fem::PeriodicMesh mesh = fem::make_mesh(20);
  const FemSpace lin = FemSpace::lagrange(mesh, 1);
  const BlockGramTriple block = fem::assemble_stokes_first_order(lin, lin);
  CHECK(block.u_dim == 20);
  CHECK(block.v_dim == 20);
  CHECK(hermitian_defect(block.gram.g1) < 1e-12);

  // (const, 0) is an exact eigenvector with eigenvalue 0
  ComplexVector c = ComplexVector::Zero(40);
  c.head(20).setOnes();
  CHECK((block.gram.g1 * c).norm() < 1e-10);
}

TEST_CASE("eigenvalue counts at N=100") {
  const fem::PeriodicMesh mesh = fem::make_mesh(100);
  const FemSpace lin = FemSpace::lagrange(mesh, 1);
  const FemSpace her = FemSpace::hermite(mesh);

  {
    const auto spec = eig::solve_first_order(fem::assemble_stokes_first_order(lin, lin));
    const int low = count_in(spec.eigenvalues, -1e-9, 1.0);
    const int high = count_in(spec.eigenvalues, 2.0, 1e99);
    const int gap = static_cast<int>(spec.eigenvalues.size()) - low - high;
    CHECK(std::abs(low - 15) <= 1);
    CHECK(std::abs(high - 99) <= 1);
    CHECK(gap >= 80);  // the spurious fill of (1, 2)
  }
  {
    const auto spec = eig::solve_first_order(fem::assemble_stokes_first_order(her, lin));
    CHECK(count_in(spec.eigenvalues, 1.0 + 1e-6, 2.0 - 1e-6) == 0);
    CHECK(count_in(spec.eigenvalues, -1e-9, 1.0 + 1e-6) == 100);
    CHECK(spec.eigenvalues.front() > -1e-9);  // the operator is nonnegative
  }
}

TEST_CASE("low eigenvalues are monotone under mesh refinement") {
  std::vector<double> coarse, fine;
  for (int n : {16, 32}) {
    const fem::PeriodicMesh mesh = fem::make_mesh(n);
    const FemSpace lin = FemSpace::lagrange(mesh, 1);
    const auto spec = eig::solve_first_order(fem::assemble_stokes_first_order(lin, lin));
    (n == 16 ? coarse : fine) = spec.eigenvalues;
  }
  for (std::size_t j = 0; j < 8; ++j)
    CHECK(fine[j] <= coarse[j] + 1e-10);
}

TEST_CASE("second-order block data") {
  const fem::PeriodicMesh mesh = fem::make_mesh(8);
  const FemSpace her = FemSpace::hermite(mesh);
  const FemSpace lin = FemSpace::lagrange(mesh, 1);
  const BlockGramTriple block = fem::assemble_stokes_second_order(her, lin);
  REQUIRE(block.gram.g2.has_value());
  CHECK(hermitian_defect(*block.gram.g2) < 1e-12);

  // (0, const v): H w = (0, 2v), so the g2 quadratic form equals 4 ||v||^2
  ComplexVector c = ComplexVector::Zero(block.u_dim + block.v_dim);
  c.tail(block.v_dim).setOnes();
  const double form = (c.adjoint() * (*block.gram.g2) * c).real()(0, 0);
  const double mass = (c.adjoint() * block.gram.g0 * c).real()(0, 0);
  CHECK(form == doctest::Approx(4.0 * mass).epsilon(1e-12));
}

TEST_CASE("second-order data matches elementwise adaptive quadrature") {
  const fem::PeriodicMesh mesh = fem::make_mesh(8);
  const FemSpace her = FemSpace::hermite(mesh);
  const FemSpace lin = FemSpace::lagrange(mesh, 1);
  const BlockGramTriple block = fem::assemble_stokes_second_order(her, lin);
  const Eigen::Index nu = block.u_dim;

  // apply the system to basis vectors: u-type w = (psi, 0) -> (-psi'', psi'),
  // v-type w = (0, phi) -> (-phi', 2 phi)
  auto apply = [&](Eigen::Index dof, double x) -> Eigen::Vector2d {
    if (dof < nu)
      return {-her.eval_basis(dof, x, 2), her.eval_basis(dof, x, 1)};
    return {-lin.eval_basis(dof - nu, x, 1), 2.0 * lin.eval_basis(dof - nu, x, 0)};
  };
  auto entry_oracle = [&](Eigen::Index m, Eigen::Index k) {
    double total = 0.0;
    for (int e = 0; e < mesh.n_nodes; ++e) {
      const double a = mesh.nodes[static_cast<std::size_t>(e)];
      total += oracle::integrate(
          [&](double x) { return apply(k, x).dot(apply(m, x)); }, a + 1e-13,
          a + mesh.h - 1e-13, 1e-14);
    }
    return total;
  };

  for (Eigen::Index m : {0L, 3L, 9L, 17L, 20L}) {
    for (Eigen::Index k : {0L, 8L, 16L, 21L}) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(std::abs((*block.gram.g2)(m, k).real() - entry_oracle(m, k)) < 1e-10);
      CHECK(std::abs((*block.gram.g2)(m, k).imag()) < 1e-14);
    }
  }
}

TEST_CASE("schur reduction comparison") {
  const fem::PeriodicMesh mesh = fem::make_mesh(10);
  const FemSpace lin = FemSpace::lagrange(mesh, 1);
  const FemSpace quad = FemSpace::lagrange(mesh, 2);
  const FemSpace her = FemSpace::hermite(mesh);

  // piecewise-constant derivatives of P1 are not inside continuous P1
  const fem::SchurComparison polluted =
      fem::schur_reduction_compare(lin, lin, {0.0, 1.5});
  CHECK(polluted.static_defect > 1e-3);
  CHECK(!polluted.derivative_space_contained);

  // Hermite derivatives are C0 piecewise quadratics, inside Lagrange(2)
  const fem::SchurComparison clean =
      fem::schur_reduction_compare(her, quad, {0.0, 1.5});
  CHECK(clean.derivative_space_contained);
  CHECK(clean.static_defect < 1e-12);

  // the differing term decays like 1/|lambda - 2|
  const fem::SchurComparison decay =
      fem::schur_reduction_compare(lin, lin, {12.0, 102.0});
  CHECK(decay.diffs[0] / decay.diffs[1] == doctest::Approx(10.0).epsilon(1e-9));

  CHECK_THROWS_AS(fem::schur_reduction_compare(lin, lin, {2.0}), PreconditionError);
}
