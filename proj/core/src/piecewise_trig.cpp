// SPDX-License-Identifier: Apache-2.0

#include "specpol/piecewise_trig.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "specpol/errors.hpp"

namespace specpol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFreqTol = 1e-12;

void normalize_segment(TrigSegment& seg) {
  std::vector<CosineTerm> kept;
  kept.reserve(seg.cosines.size());
  for (CosineTerm term : seg.cosines) {
    term.frequency = std::abs(term.frequency);
    if (term.frequency < kFreqTol) {
      seg.constant += term.amplitude;  // cos(0 x) = 1
      continue;
    }
    bool merged = false;
    for (CosineTerm& existing : kept) {
      if (std::abs(existing.frequency - term.frequency) < kFreqTol) {
        existing.amplitude += term.amplitude;
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(term);
  }
  std::sort(kept.begin(), kept.end(),
            [](const CosineTerm& a, const CosineTerm& b) { return a.frequency < b.frequency; });
  seg.cosines = std::move(kept);
}

}  // namespace

double TrigSegment::eval(double x) const {
  double value = constant;
  for (const CosineTerm& term : cosines) value += term.amplitude * std::cos(term.frequency * x);
  return value;
}

PiecewiseTrig::PiecewiseTrig(std::vector<TrigSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw PreconditionError("profile needs at least one segment");
  std::sort(segments_.begin(), segments_.end(),
            [](const TrigSegment& a, const TrigSegment& b) { return a.left < b.left; });
  const double tol = 1e-12;
  if (std::abs(segments_.front().left + kPi) > tol)
    throw PreconditionError("profile segments must start at -pi");
  if (std::abs(segments_.back().right - kPi) > tol)
    throw PreconditionError("profile segments must end at pi");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].left < segments_[i].right))
      throw PreconditionError("empty or reversed profile segment");
    if (i + 1 < segments_.size() &&
        std::abs(segments_[i].right - segments_[i + 1].left) > tol)
      throw PreconditionError("profile segments must partition [-pi, pi)");
  }
  for (TrigSegment& seg : segments_) normalize_segment(seg);
}

double PiecewiseTrig::operator()(double x) const {
  if (!(x >= -kPi && x < kPi))
    throw PreconditionError("profile argument outside [-pi, pi): " + std::to_string(x));
  for (const TrigSegment& seg : segments_) {
    if (x >= seg.left && x < seg.right) return seg.eval(x);
  }
  // x == right endpoint of the last segment up to roundoff
  return segments_.back().eval(x);
}

PiecewiseTrig PiecewiseTrig::squared() const {
  std::vector<TrigSegment> out;
  out.reserve(segments_.size());
  for (const TrigSegment& seg : segments_) {
    TrigSegment sq;
    sq.left = seg.left;
    sq.right = seg.right;
    sq.constant = seg.constant * seg.constant;
    for (const CosineTerm& t : seg.cosines)
      sq.cosines.push_back({2.0 * seg.constant * t.amplitude, t.frequency});
    // cos u cos v = (cos(u - v) + cos(u + v)) / 2
    for (const CosineTerm& a : seg.cosines) {
      for (const CosineTerm& b : seg.cosines) {
        const double amp = 0.5 * a.amplitude * b.amplitude;
        sq.cosines.push_back({amp, a.frequency - b.frequency});
        sq.cosines.push_back({amp, a.frequency + b.frequency});
      }
    }
    out.push_back(std::move(sq));
  }
  return PiecewiseTrig(std::move(out));
}

PiecewiseTrig constant_profile(double value) {
  return PiecewiseTrig({TrigSegment{-kPi, kPi, value, {}}});
}

}  // namespace specpol
