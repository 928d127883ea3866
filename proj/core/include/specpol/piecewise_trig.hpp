// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace specpol {

/// One term amplitude * cos(frequency * x). Frequencies are kept nonnegative;
/// a zero frequency is folded into the segment constant on construction.
struct CosineTerm {
  double amplitude = 0.0;
  double frequency = 0.0;
};

/// One branch of a profile, valid on the half-open interval [left, right).
struct TrigSegment {
  double left = 0.0;
  double right = 0.0;
  double constant = 0.0;
  std::vector<CosineTerm> cosines;

  double eval(double x) const;
};

/// Real piecewise trigonometric profile whose segments partition [-pi, pi).
/// Supports exact pointwise squaring via product-to-sum expansion, which keeps
/// the square in the same closed form (used for the second-order Gram data).
class PiecewiseTrig {
 public:
  PiecewiseTrig() = default;
  explicit PiecewiseTrig(std::vector<TrigSegment> segments);

  const std::vector<TrigSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  /// Evaluate at x in [-pi, pi). Throws PreconditionError outside the domain.
  double operator()(double x) const;

  /// The pointwise square, expanded back into constant + cosine form.
  PiecewiseTrig squared() const;

 private:
  std::vector<TrigSegment> segments_;
};

/// Profile identically equal to `value` on [-pi, pi).
PiecewiseTrig constant_profile(double value);

}  // namespace specpol
