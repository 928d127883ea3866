// SPDX-License-Identifier: Apache-2.0

#include "specpol/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lapack_backend.hpp"
#include "specpol/errors.hpp"

namespace specpol::eig {

namespace {

void require_square_pair(const ComplexMatrix& g0, const ComplexMatrix& g1) {
  if (g0.rows() == 0 || g0.rows() != g0.cols() || g1.rows() != g1.cols() ||
      g0.rows() != g1.rows())
    throw PreconditionError("gram matrices must be square and of equal size");
}

// min eig(g0) must clear the rank tolerance relative to ||g0||.
void require_positive_mass(const ComplexMatrix& g0, double mass_rank_tol) {
  const Eigen::VectorXd spectrum = detail::hermitian_eigenvalues(g0);
  const double norm = std::max(std::abs(spectrum(0)), std::abs(spectrum(spectrum.size() - 1)));
  if (spectrum(0) <= mass_rank_tol * norm)
    throw IllPosedMassError("mass matrix is numerically singular: min eig " +
                            std::to_string(spectrum(0)));
}

}  // namespace

const char* backend_name() { return detail::backend_name(); }

double first_order_residual(const GramTriple& gram, double lambda,
                            const ComplexVector& c) {
  return (gram.g1 * c - lambda * (gram.g0 * c)).norm() / c.norm();
}

double quadratic_residual(const GramTriple& gram, std::complex<double> z,
                          const ComplexVector& u) {
  if (!gram.g2) throw PreconditionError("quadratic residual needs g2");
  return (*gram.g2 * u - 2.0 * z * (gram.g1 * u) + z * z * (gram.g0 * u)).norm() /
         u.norm();
}

FirstOrderResult solve_first_order(const GramTriple& gram, double mass_rank_tol) {
  require_square_pair(gram.g0, gram.g1);
  require_positive_mass(gram.g0, mass_rank_tol);

  Eigen::MatrixXcd vectors = gram.g1;
  Eigen::VectorXd values;
  detail::hermitian_definite_generalized(vectors, gram.g0, values);

  FirstOrderResult result;
  const Eigen::Index n = values.size();
  result.eigenvalues.assign(values.data(), values.data() + n);
  result.eigenvectors = std::move(vectors);
  result.residuals.resize(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j)
    result.residuals[static_cast<std::size_t>(j)] =
        first_order_residual(gram, values(j), result.eigenvectors.col(j));
  return result;
}

FirstOrderResult solve_first_order(const BlockGramTriple& gram, double mass_rank_tol) {
  return solve_first_order(gram.gram, mass_rank_tol);
}

SecondOrderResult solve_second_order(const GramTriple& gram,
                                     double residual_flag_tol, double mass_rank_tol) {
  require_square_pair(gram.g0, gram.g1);
  if (!gram.g2) throw PreconditionError("second-order solve needs g2");
  if (gram.g2->rows() != gram.g0.rows() || gram.g2->cols() != gram.g0.cols())
    throw PreconditionError("g2 dimension mismatch");
  require_positive_mass(gram.g0, mass_rank_tol);

  // First companion form of g2 - z (2 g1) + z^2 g0, with the mass on the
  // leading block so the pencil has no infinite eigenvalues:
  //   [ 0    I  ]       [ I  0  ]
  //   [ -g2  2g1] x = z [ 0  g0 ] x ,   x = (u, z u).
  const Eigen::Index n = gram.g0.rows();
  ComplexMatrix a = ComplexMatrix::Zero(2 * n, 2 * n);
  ComplexMatrix b = ComplexMatrix::Zero(2 * n, 2 * n);
  a.topRightCorner(n, n) = ComplexMatrix::Identity(n, n);
  a.bottomLeftCorner(n, n) = -*gram.g2;
  a.bottomRightCorner(n, n) = 2.0 * gram.g1;
  b.topLeftCorner(n, n) = ComplexMatrix::Identity(n, n);
  b.bottomRightCorner(n, n) = gram.g0;

  Eigen::VectorXcd alpha, beta;
  ComplexMatrix vectors;
  detail::complex_generalized(std::move(a), std::move(b), alpha, beta, vectors);

  struct Entry {
    std::complex<double> z;
    double residual;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(2 * n));
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    if (std::abs(beta(j)) == 0.0) continue;  // cannot occur for definite g0
    const std::complex<double> z = alpha(j) / beta(j);
    // x = (u, z u): read u off the better-scaled block.
    ComplexVector u = std::abs(z) <= 1.0 ? vectors.col(j).head(n)
                                         : vectors.col(j).tail(n);
    entries.push_back({z, quadratic_residual(gram, z, u)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& p, const Entry& q) {
    if (p.z.real() != q.z.real()) return p.z.real() < q.z.real();
    return p.z.imag() < q.z.imag();
  });

  SecondOrderResult result;
  result.residual_flag_tol = residual_flag_tol;
  result.points.reserve(entries.size());
  for (const Entry& e : entries) {
    result.points.push_back(e.z);
    result.residuals.push_back(e.residual);
    result.enclosures.push_back(enclosure(e.z));
  }
  return result;
}

SecondOrderResult solve_second_order(const BlockGramTriple& gram,
                                     double residual_flag_tol, double mass_rank_tol) {
  return solve_second_order(gram.gram, residual_flag_tol, mass_rank_tol);
}

ResidualReport validate_residuals(const FirstOrderResult& result, double tol) {
  ResidualReport report;
  for (std::size_t i = 0; i < result.residuals.size(); ++i)
    if (!(result.residuals[i] <= tol)) report.failing.push_back(i);
  report.pass = report.failing.empty();
  return report;
}

ResidualReport validate_residuals(const SecondOrderResult& result, double tol) {
  ResidualReport report;
  for (std::size_t i = 0; i < result.residuals.size(); ++i)
    if (!(result.residuals[i] <= tol)) report.failing.push_back(i);
  report.pass = report.failing.empty();
  return report;
}

}  // namespace specpol::eig
