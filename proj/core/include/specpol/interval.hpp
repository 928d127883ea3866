// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace specpol {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const {
    return x >= lo - slack && x <= hi + slack;
  }
  bool intersects(const Interval& other, double slack = 0.0) const {
    return lo <= other.hi + slack && other.lo <= hi + slack;
  }
  Interval widened(double slack) const { return {lo - slack, hi + slack}; }
};

/// The a posteriori interval [Re z - |Im z|, Re z + |Im z|] certified to meet
/// the spectrum whenever z is a second-order relative spectral point.
inline Interval enclosure(std::complex<double> z) {
  const double w = std::abs(z.imag());
  return {z.real() - w, z.real() + w};
}

}  // namespace specpol
