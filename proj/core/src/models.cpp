// SPDX-License-Identifier: Apache-2.0

#include "specpol/models.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "specpol/errors.hpp"

namespace specpol {

namespace {
constexpr double kPi = std::numbers::pi;
}

double RationalAngle::radians() const { return -kPi * static_cast<double>(q) / static_cast<double>(p); }

PiecewiseTrig jump_profile(double y) {
  if (!(y >= -kPi && y < kPi))
    throw PreconditionError("discontinuity point must lie in [-pi, pi)");
  std::vector<TrigSegment> segs;
  if (y > -kPi) segs.push_back({-kPi, y, -1.5, {{0.5, std::sqrt(5.0)}}});
  segs.push_back({y, kPi, 2.0, {{1.0, std::sqrt(2.0)}}});
  return PiecewiseTrig(std::move(segs));
}

OperatorModel make_multiplication_model(double y) {
  return {ModelKind::MultiplicationA, y, std::nullopt, jump_profile(y)};
}

OperatorModel make_multiplication_model(RationalAngle y) {
  OperatorModel model = make_multiplication_model(y.radians());
  model.y_rational = y;
  return model;
}

OperatorModel make_perturbed_model(double y) {
  return {ModelKind::PerturbedB, y, std::nullopt, jump_profile(y)};
}

OperatorModel make_perturbed_model(RationalAngle y) {
  OperatorModel model = make_perturbed_model(y.radians());
  model.y_rational = y;
  return model;
}

OperatorModel make_stokes_model() {
  return {ModelKind::StokesH, 0.0, std::nullopt, PiecewiseTrig{}};
}

OperatorModel make_constant_model(double value) {
  return {ModelKind::MultiplicationA, 0.0, RationalAngle{0, 1}, constant_profile(value)};
}

double eval_profile(const OperatorModel& model, double x) {
  if (model.kind == ModelKind::StokesH)
    throw UnsupportedError("the ODE-system model has no pointwise multiplier");
  return model.profile(x);
}

std::pair<double, double> stokes_eigenvalue_pair(std::int64_t k) {
  const double kk = static_cast<double>(k) * static_cast<double>(k);
  const double half_trace = 0.5 * (kk + 2.0);
  const double plus = half_trace + std::sqrt(half_trace * half_trace - kk);
  // the minus branch by Vieta; the subtractive form cancels for large k
  return {kk / plus, plus};
}

double stokes_symbol_det(double lambda, double xi) { return xi * xi * (1.0 - lambda); }

namespace {

// Range of a profile over the whole domain: each segment's constant plus the
// full oscillation of its cosines gives a conservative band; for the two
// concrete branches the bands [-2,-1] and [1,3] are attained exactly.
std::vector<Interval> profile_bands(const PiecewiseTrig& profile) {
  std::vector<Interval> bands;
  for (const TrigSegment& seg : profile.segments()) {
    double swing = 0.0;
    for (const CosineTerm& t : seg.cosines) swing += std::abs(t.amplitude);
    bands.push_back({seg.constant - swing, seg.constant + swing});
  }
  std::sort(bands.begin(), bands.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  // merge overlaps
  std::vector<Interval> merged;
  for (const Interval& b : bands) {
    if (!merged.empty() && b.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, b.hi);
    } else {
      merged.push_back(b);
    }
  }
  return merged;
}

}  // namespace

ExactSpectrum exact_spectrum(const OperatorModel& model, std::int64_t k_max) {
  ExactSpectrum spectrum;
  switch (model.kind) {
    case ModelKind::MultiplicationA:
    case ModelKind::PerturbedB:
      // The perturbed operator keeps the essential bands; its discrete
      // eigenvalues are not known in closed form and are left out.
      spectrum.bands = profile_bands(model.profile);
      break;
    case ModelKind::StokesH: {
      spectrum.essential_points.push_back(1.0);
      for (std::int64_t k = 0; k <= k_max; ++k) {
        const auto [lo, hi] = stokes_eigenvalue_pair(k);
        const int mult = k == 0 ? 1 : 2;
        spectrum.eigenvalues.push_back({lo, mult});
        spectrum.eigenvalues.push_back({hi, mult});
      }
      std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                [](const SpectralPoint& a, const SpectralPoint& b) { return a.value < b.value; });
      break;
    }
  }
  return spectrum;
}

bool spectrum_contains(const ExactSpectrum& spectrum, double x, double slack) {
  for (const Interval& band : spectrum.bands)
    if (band.contains(x, slack)) return true;
  for (const SpectralPoint& ev : spectrum.eigenvalues)
    if (std::abs(x - ev.value) <= slack) return true;
  for (double p : spectrum.essential_points)
    if (std::abs(x - p) <= slack) return true;
  return false;
}

bool spectrum_intersects(const ExactSpectrum& spectrum, const Interval& window,
                         double slack) {
  const Interval w = window.widened(slack);
  for (const Interval& band : spectrum.bands)
    if (band.intersects(w)) return true;
  for (const SpectralPoint& ev : spectrum.eigenvalues)
    if (w.contains(ev.value)) return true;
  for (double p : spectrum.essential_points)
    if (w.contains(p)) return true;
  return false;
}

std::int64_t omega_period(std::int64_t p, std::int64_t q) {
  if (p <= 0) throw PreconditionError("omega_period: p must be positive");
  if (q < 0) throw PreconditionError("omega_period: q must be nonnegative");
  if (q != 0 && std::gcd(p, q) != 1)
    throw PreconditionError("omega_period: p and q must be coprime, got " +
                            std::to_string(q) + "/" + std::to_string(p));
  if (q == 0) return 2;
  if (p % 2 == 1 && q % 2 == 1) return p;
  return 2 * p;
}

}  // namespace specpol
