// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

#include "specpol/gram.hpp"
#include "specpol/models.hpp"
#include "specpol/piecewise_trig.hpp"

namespace specpol::fourier {

/// Index window lo..hi into the orthonormal basis e_k(x) = (2 pi)^{-1/2} e^{ikx}.
struct Window {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool contains(int label) const { return label >= lo && label <= hi; }
  /// Row index of a basis label.
  Eigen::Index row(int label) const { return label - lo; }

  /// The window of dimension n centred at zero: {-n..n} for odd dimension
  /// 2n+1, {-n..n-1} for even dimension 2n.
  static Window symmetric(int dimension);
};

/// j-th Fourier coefficient (1/2pi) \int_{-pi}^{pi} profile(x) e^{-ijx} dx,
/// evaluated in closed form from elementary integrals of e^{i beta x} over the
/// segments. For real profiles coeff(-j) = conj(coeff(j)).
std::complex<double> profile_coefficient(const PiecewiseTrig& profile, double j);

/// Truncated matrix of multiplication by the profile: g1 is Toeplitz with
/// g1[m,k] = coeff(m - k), g0 = identity.
GramTriple assemble_multiplication(const PiecewiseTrig& profile, Window window);

/// Same plus g2[m,k] = coeff of the squared profile at m - k.
GramTriple assemble_multiplication_second_order(const PiecewiseTrig& profile,
                                                Window window);

/// The rank-two perturbed operator: multiplication matrix with -3 added at
/// basis label (-1,-1) and +1 at (2,2). The window must contain both labels.
GramTriple assemble_perturbed(const PiecewiseTrig& profile, Window window);

/// Second-order data for the perturbed operator. The cross terms between the
/// multiplier and the rank-two part are closed-form coefficient corrections in
/// the rows and columns of labels -1 and 2.
GramTriple assemble_perturbed_second_order(const PiecewiseTrig& profile,
                                           Window window);

/// Dispatch on the model kind. StokesH is rejected (it is discretized by
/// finite elements, not by the exponential basis).
GramTriple assemble(const OperatorModel& model, Window window, bool second_order);

}  // namespace specpol::fourier
