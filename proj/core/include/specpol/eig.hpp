// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "specpol/gram.hpp"
#include "specpol/interval.hpp"

namespace specpol::eig {

/// Identifier of the dense backend, recorded in run manifests.
const char* backend_name();

struct FirstOrderResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, g0-orthonormal
  std::vector<double> residuals;    // ||(g1 - lambda g0) c|| / ||c||
};

/// Solutions z of det(g2 - z (2 g1) + z^2 g0) = 0 via companion linearization.
/// All 2n finite points are returned sorted by (Re, Im); points whose quadratic
/// residual exceeds residual_flag_tol are kept but flagged, and every point
/// carries its a posteriori interval.
struct SecondOrderResult {
  std::vector<std::complex<double>> points;
  std::vector<double> residuals;    // ||(g2 - 2z g1 + z^2 g0) u|| / ||u||
  std::vector<Interval> enclosures;
  double residual_flag_tol = 1e-6;

  bool passes(std::size_t i) const { return residuals[i] <= residual_flag_tol; }
  std::size_t size() const { return points.size(); }
};

/// Generalized Hermitian-definite eigenproblem g1 c = lambda g0 c.
/// Throws IllPosedMassError when min eig(g0) <= mass_rank_tol * ||g0||.
FirstOrderResult solve_first_order(const GramTriple& gram,
                                   double mass_rank_tol = 1e-12);
FirstOrderResult solve_first_order(const BlockGramTriple& gram,
                                   double mass_rank_tol = 1e-12);

SecondOrderResult solve_second_order(const GramTriple& gram,
                                     double residual_flag_tol = 1e-6,
                                     double mass_rank_tol = 1e-12);
SecondOrderResult solve_second_order(const BlockGramTriple& gram,
                                     double residual_flag_tol = 1e-6,
                                     double mass_rank_tol = 1e-12);

double first_order_residual(const GramTriple& gram, double lambda,
                            const ComplexVector& c);
double quadratic_residual(const GramTriple& gram, std::complex<double> z,
                          const ComplexVector& u);

struct ResidualReport {
  bool pass = true;
  std::vector<std::size_t> failing;
};

ResidualReport validate_residuals(const FirstOrderResult& result, double tol);
ResidualReport validate_residuals(const SecondOrderResult& result, double tol);

}  // namespace specpol::eig
