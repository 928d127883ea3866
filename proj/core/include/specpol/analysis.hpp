// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specpol/eig.hpp"
#include "specpol/fem.hpp"
#include "specpol/interval.hpp"
#include "specpol/models.hpp"

namespace specpol::analysis {

/// Check that every residual-passing second-order point has an enclosure that
/// meets the known spectrum, widened per point by slack_scale * max(1, |z|).
struct EnclosureReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;

  bool pass() const { return violations.empty(); }
};

EnclosureReport verify_enclosures(const eig::SecondOrderResult& points,
                                  const ExactSpectrum& truth,
                                  double slack_scale = 1e-6);

/// No residual-passing point may lie strictly inside the open disk whose
/// diameter is a spectrum-free interval (a, b).
struct DiskReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;

  bool pass() const { return violations.empty(); }
};

DiskReport disk_exclusion(const eig::SecondOrderResult& points, Interval gap,
                          double boundary_tol = 1e-6);

enum class Label { confirmed, suspect };

struct ClassifiedValue {
  double lambda = 0.0;
  Label label = Label::suspect;
  std::optional<std::complex<double>> nearest;  // nearest passing point, if any
  double dist_re = 0.0;
  double dist_im = 0.0;
};

/// Confirmed/suspect split of first-order eigenvalues against a second-order
/// point set. A value lambda is confirmed when some residual-passing point z
/// has |Re z - lambda| <= delta_re, |Im z| <= delta_im, and its enclosure
/// interval covers lambda (up to a small numerical slack); the last condition
/// is what separates a certificate for lambda itself from one for a nearby
/// piece of essential spectrum. Suspect values merely need further attention;
/// they are not established as spurious.
struct ClassificationReport {
  std::vector<ClassifiedValue> entries;
  double delta_re = 0.0;
  double delta_im = 0.0;
  std::string caveat;

  std::vector<double> confirmed() const;
  std::vector<double> suspect() const;
};

ClassificationReport classify(const eig::FirstOrderResult& first,
                              const eig::SecondOrderResult& second,
                              double delta_re = 0.06, double delta_im = 0.06);

/// Descriptor of one indicator basis vector: the value window W whose preimage
/// under the profile carries the indicator, and the number of grid cells in
/// the support.
struct PollutionBasisVector {
  Interval value_window;
  std::int64_t support_cells = 0;
};

struct PollutionConstruction {
  double lambda_target = 0.0;
  double mu_minus = 0.0;
  double mu_plus = 0.0;
  double verification_residual = 0.0;
  std::vector<PollutionBasisVector> minus_vectors;
  std::vector<PollutionBasisVector> plus_vectors;
  Eigen::MatrixXd projected;  // compression of the multiplier onto the subspace
};

/// Constructive pollution at an arbitrary gap point: indicator vectors of
/// profile preimages of value windows strictly left/right of lambda make the
/// mixed vector u_k an exact eigenvector of the compressed operator with
/// eigenvalue lambda. Everything is built in a weighted grid inner product
/// (grid_cells cells aligned with the profile segments), in which the
/// construction identity holds to machine precision.
PollutionConstruction construct_pollution_subspace(const OperatorModel& model,
                                                   double lambda_target, int k,
                                                   std::int64_t grid_cells = 10000);

/// delta (2 - delta) / (1 - delta): the proved bound on ||P - P'|| when every
/// basis vector is perturbed by a vector of norm delta.
double spectrum_push_delta_bound(double delta);

struct PushReport {
  double epsilon = 0.0;
  double floor_target = 0.0;  // requested R
  double delta = 0.0;
  double tau = 0.0;
  double form_bound = 0.0;        // M = sup of the form ratio on L
  int first_mode = 0;             // lowest perturbing frequency used
  int mode_count = 0;             // dim L
  double projection_distance = 0.0;  // computed ||P - P'||
  double min_eigenvalue = 0.0;       // of the perturbed compression
};

/// Constructive instability for the unbounded model: perturb the span of the
/// low_mode_count lowest eigenfunctions by high-frequency eigenfunctions with
/// eigenvalue above tau = (2 (1+delta)^2 (R+1) + 4M) / delta^2, scaled to norm
/// delta. The perturbed subspace stays within epsilon of the original in
/// projection norm while the compressed spectrum moves above R. Throws
/// CapacityError when the needed frequency exceeds max_frequency.
PushReport push_spectrum(int low_mode_count, double epsilon, double floor_target,
                         std::int64_t max_frequency = 1'000'000);

struct PeriodicityReport {
  std::int64_t omega = 0;
  // N mod omega -> (N, sorted gap eigenvalues of that truncation)
  std::map<std::int64_t, std::vector<std::pair<int, std::vector<double>>>> families;
  double intra_family_spread = 0.0;    // max matched step within a family
  double cross_family_distance = 0.0;  // min Hausdorff distance across families
  bool periodic = false;
};

/// Group gap eigenvalues of the truncations by N mod omega(q/p) and measure
/// how slowly each family drifts compared with the separation between
/// families. Detection thresholds: intra < 1e-2, cross > 5e-2.
PeriodicityReport periodicity_analysis(const OperatorModel& model, int n_first,
                                       int n_last, Interval gap = {-1.0, 1.0});

struct RateEntry {
  std::int64_t k = 0;
  char series = '-';
  double target = 0.0;
  bool matched = true;  // false when some N had no computed value within 0.5
  std::optional<double> first_order_slope;
  int first_order_samples = 0;
  std::optional<double> second_re_slope;
  std::optional<double> second_im_slope;
  int second_samples = 0;
};

struct ConvergenceReport {
  std::vector<RateEntry> entries;
};

/// Log-log convergence rates of eigenvalue errors against the exact values
/// lambda_k^+/-, for first-order spectra and (optionally) the matched
/// second-order points. Error samples below the solver noise floor, and
/// trailing samples that stop decreasing geometrically, are trimmed before the
/// least-squares fit; the surviving sample count is reported per entry.
ConvergenceReport convergence_rates(fem::SpaceSpec space_u, fem::SpaceSpec space_v,
                                    const std::vector<int>& n_list,
                                    const std::vector<std::int64_t>& k_list,
                                    bool with_second_order);

}  // namespace specpol::analysis
