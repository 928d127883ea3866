// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specpol/interval.hpp"
#include "specpol/piecewise_trig.hpp"

namespace specpol {

enum class ModelKind { MultiplicationA, PerturbedB, StokesH };

/// Angle stored exactly as y = -pi * q / p. Keeping the pair exact makes the
/// truncation period omega_period(p, q) an integer computation.
struct RationalAngle {
  std::int64_t q = 0;
  std::int64_t p = 1;

  double radians() const;
};

/// One of the concrete self-adjoint models: multiplication by a discontinuous
/// trigonometric profile, its rank-two perturbation, or the mixed-order
/// ODE system on [-pi, pi] with periodic boundary conditions.
struct OperatorModel {
  ModelKind kind = ModelKind::MultiplicationA;
  double y = 0.0;                           // discontinuity angle (first two kinds)
  std::optional<RationalAngle> y_rational;  // set when y was given as a fraction of pi
  PiecewiseTrig profile;                    // empty for StokesH
};

struct SpectralPoint {
  double value = 0.0;
  int multiplicity = 1;
};

/// Known spectrum of a model: continuous bands, discrete eigenvalues, and
/// essential-spectrum points, all sorted ascending.
struct ExactSpectrum {
  std::vector<Interval> bands;
  std::vector<SpectralPoint> eigenvalues;
  std::vector<double> essential_points;
};

bool spectrum_contains(const ExactSpectrum& spectrum, double x, double slack = 0.0);
bool spectrum_intersects(const ExactSpectrum& spectrum, const Interval& window,
                         double slack = 0.0);

/// The two-branch profile with the jump at y: -3/2 + cos(sqrt(5) x)/2 on
/// [-pi, y) and 2 + cos(sqrt(2) x) on [y, pi).
PiecewiseTrig jump_profile(double y);

OperatorModel make_multiplication_model(double y);
OperatorModel make_multiplication_model(RationalAngle y);
OperatorModel make_perturbed_model(double y);
OperatorModel make_perturbed_model(RationalAngle y);
OperatorModel make_stokes_model();
/// Multiplication by a constant; handy as an analytically trivial case.
OperatorModel make_constant_model(double value);

/// Pointwise value of the model's multiplier. StokesH has no multiplier and is
/// rejected with UnsupportedError.
double eval_profile(const OperatorModel& model, double x);

/// The exact spectrum oracle. For StokesH the discrete eigenvalues are listed
/// for k = 0..k_max; for the perturbed model only the essential bands are
/// known in closed form and the eigenvalue list stays empty.
ExactSpectrum exact_spectrum(const OperatorModel& model, std::int64_t k_max = 32);

/// Eigenvalue pair (lambda_k^-, lambda_k^+) of the ODE system, i.e. the roots
/// of mu^2 - (k^2 + 2) mu + k^2 = 0.
std::pair<double, double> stokes_eigenvalue_pair(std::int64_t k);

/// Determinant of the principal symbol of the system: xi^2 (1 - lambda).
double stokes_symbol_det(double lambda, double xi);

/// Minimal natural number w such that w(pi + y) and w(pi - y) are integer
/// multiples of 2 pi for y = -pi q / p. Requires gcd(p, q) = 1 when q != 0.
std::int64_t omega_period(std::int64_t p, std::int64_t q);

}  // namespace specpol
