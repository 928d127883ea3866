// SPDX-License-Identifier: Apache-2.0

#include "specpol/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "specpol/errors.hpp"

namespace specpol::fourier {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

double sinc(double t) {
  if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;  // series branch near 0
  return std::sin(t) / t;
}

// (1/2pi) \int_l^r e^{i gamma x} dx written through sinc so no cancellation
// occurs as gamma -> 0.
Complex exp_mean(double gamma, double l, double r) {
  const double mid = 0.5 * (l + r);
  const double half = 0.5 * (r - l);
  return (r - l) / (2.0 * kPi) * std::polar(1.0, gamma * mid) * sinc(gamma * half);
}

}  // namespace

Window Window::symmetric(int dimension) {
  if (dimension <= 0) throw PreconditionError("window dimension must be positive");
  if (dimension % 2 == 1) {
    const int n = (dimension - 1) / 2;
    return {-n, n};
  }
  const int n = dimension / 2;
  return {-n, n - 1};
}

std::complex<double> profile_coefficient(const PiecewiseTrig& profile, double j) {
  Complex total = 0.0;
  for (const TrigSegment& seg : profile.segments()) {
    total += seg.constant * exp_mean(-j, seg.left, seg.right);
    for (const CosineTerm& t : seg.cosines) {
      total += 0.5 * t.amplitude *
               (exp_mean(t.frequency - j, seg.left, seg.right) +
                exp_mean(-t.frequency - j, seg.left, seg.right));
    }
  }
  return total;
}

namespace {

ComplexMatrix toeplitz_from(const PiecewiseTrig& profile, Window window) {
  const int n = window.size();
  std::vector<Complex> coeff(2 * n - 1);
  for (int d = -(n - 1); d <= n - 1; ++d)
    coeff[static_cast<std::size_t>(d + n - 1)] = profile_coefficient(profile, d);
  ComplexMatrix m(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = 0; col < n; ++col)
      m(row, col) = coeff[static_cast<std::size_t>(row - col + n - 1)];
  return m;
}

void require_perturbation_labels(Window window) {
  if (!window.contains(-1) || !window.contains(2))
    throw PreconditionError(
        "perturbed assembly needs basis labels -1 and 2 inside the window");
}

}  // namespace

GramTriple assemble_multiplication(const PiecewiseTrig& profile, Window window) {
  GramTriple gram;
  gram.g1 = toeplitz_from(profile, window);
  gram.g0 = ComplexMatrix::Identity(window.size(), window.size());
  return gram;
}

GramTriple assemble_multiplication_second_order(const PiecewiseTrig& profile,
                                                Window window) {
  GramTriple gram = assemble_multiplication(profile, window);
  gram.g2 = toeplitz_from(profile.squared(), window);
  return gram;
}

GramTriple assemble_perturbed(const PiecewiseTrig& profile, Window window) {
  require_perturbation_labels(window);
  GramTriple gram = assemble_multiplication(profile, window);
  const Eigen::Index r1 = window.row(-1);
  const Eigen::Index r2 = window.row(2);
  gram.g1(r1, r1) -= 3.0;
  gram.g1(r2, r2) += 1.0;
  return gram;
}

GramTriple assemble_perturbed_second_order(const PiecewiseTrig& profile,
                                           Window window) {
  require_perturbation_labels(window);
  GramTriple gram = assemble_perturbed(profile, window);
  ComplexMatrix g2 = toeplitz_from(profile.squared(), window);

  // Off-Toeplitz corrections from the rank-two part V = -3 P_{-1} + P_2:
  // (V e_k, A e_m) lands in columns -1 and 2, (A e_k, V e_m) in rows -1 and 2,
  // and (V e_k, V e_m) on the two diagonal cells.
  const Eigen::Index r1 = window.row(-1);
  const Eigen::Index r2 = window.row(2);
  for (int label = window.lo; label <= window.hi; ++label) {
    const Eigen::Index row = window.row(label);
    g2(row, r1) += -3.0 * profile_coefficient(profile, label + 1);
    g2(row, r2) += profile_coefficient(profile, label - 2);
    g2(r1, row) += -3.0 * profile_coefficient(profile, -1 - label);
    g2(r2, row) += profile_coefficient(profile, 2 - label);
  }
  g2(r1, r1) += 9.0;
  g2(r2, r2) += 1.0;
  gram.g2 = std::move(g2);
  return gram;
}

GramTriple assemble(const OperatorModel& model, Window window, bool second_order) {
  switch (model.kind) {
    case ModelKind::MultiplicationA:
      return second_order
                 ? assemble_multiplication_second_order(model.profile, window)
                 : assemble_multiplication(model.profile, window);
    case ModelKind::PerturbedB:
      return second_order ? assemble_perturbed_second_order(model.profile, window)
                          : assemble_perturbed(model.profile, window);
    case ModelKind::StokesH:
      throw UnsupportedError(
          "the ODE-system model is discretized with finite elements, not the "
          "exponential basis");
  }
  throw PreconditionError("unknown model kind");
}

}  // namespace specpol::fourier
