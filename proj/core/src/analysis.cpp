// SPDX-License-Identifier: Apache-2.0

#include "specpol/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "specpol/errors.hpp"
#include "specpol/fourier.hpp"

namespace specpol::analysis {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

}  // namespace

EnclosureReport verify_enclosures(const eig::SecondOrderResult& points,
                                  const ExactSpectrum& truth, double slack_scale) {
  EnclosureReport report;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points.passes(i)) continue;
    ++report.checked;
    const double slack = slack_scale * std::max(1.0, std::abs(points.points[i]));
    if (!spectrum_intersects(truth, points.enclosures[i], slack))
      report.violations.push_back(i);
  }
  return report;
}

DiskReport disk_exclusion(const eig::SecondOrderResult& points, Interval gap,
                          double boundary_tol) {
  if (!(gap.lo < gap.hi)) throw PreconditionError("gap interval is empty");
  const Complex center(0.5 * (gap.lo + gap.hi), 0.0);
  const double radius = 0.5 * gap.length();
  DiskReport report;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points.passes(i)) continue;
    ++report.checked;
    if (std::abs(points.points[i] - center) < radius - boundary_tol)
      report.violations.push_back(i);
  }
  return report;
}

std::vector<double> ClassificationReport::confirmed() const {
  std::vector<double> out;
  for (const ClassifiedValue& e : entries)
    if (e.label == Label::confirmed) out.push_back(e.lambda);
  return out;
}

std::vector<double> ClassificationReport::suspect() const {
  std::vector<double> out;
  for (const ClassifiedValue& e : entries)
    if (e.label == Label::suspect) out.push_back(e.lambda);
  return out;
}

ClassificationReport classify(const eig::FirstOrderResult& first,
                              const eig::SecondOrderResult& second,
                              double delta_re, double delta_im) {
  if (delta_re < 0 || delta_im < 0)
    throw PreconditionError("classification thresholds must be nonnegative");
  ClassificationReport report;
  report.delta_re = delta_re;
  report.delta_im = delta_im;
  report.caveat =
      "suspect values require additional attention; the absence of a nearby "
      "second-order point does not prove them spurious";
  // The certificate of a point z only locates spectrum inside its enclosure
  // interval; lambda must sit in it, up to a slack covering the solver's
  // double-root splitting noise.
  const double containment_slack = 0.01 * delta_im;

  for (double lambda : first.eigenvalues) {
    ClassifiedValue entry;
    entry.lambda = lambda;
    entry.dist_re = std::numeric_limits<double>::infinity();
    entry.dist_im = std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    bool confirmed = false;
    for (std::size_t i = 0; i < second.size(); ++i) {
      if (!second.passes(i)) continue;
      const Complex z = second.points[i];
      const double d = std::abs(z - Complex(lambda, 0.0));
      if (d < best) {
        best = d;
        entry.nearest = z;
        entry.dist_re = std::abs(z.real() - lambda);
        entry.dist_im = std::abs(z.imag());
      }
      if (std::abs(z.real() - lambda) <= delta_re &&
          std::abs(z.imag()) <= delta_im &&
          second.enclosures[i].contains(lambda, containment_slack))
        confirmed = true;
    }
    entry.label = confirmed ? Label::confirmed : Label::suspect;
    report.entries.push_back(entry);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Constructive pollution at an arbitrary gap point.

namespace {

struct WeightedGrid {
  std::vector<double> x;       // cell midpoints, segment-aligned
  std::vector<double> w;       // cell lengths
  std::vector<double> values;  // profile values at midpoints
};

WeightedGrid make_profile_grid(const PiecewiseTrig& profile, std::int64_t cells) {
  WeightedGrid grid;
  grid.x.reserve(static_cast<std::size_t>(cells) + profile.segments().size());
  for (const TrigSegment& seg : profile.segments()) {
    const double len = seg.right - seg.left;
    const auto n = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::llround(cells * len / (2.0 * kPi))));
    const double dx = len / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
      const double xm = seg.left + (static_cast<double>(i) + 0.5) * dx;
      grid.x.push_back(xm);
      grid.w.push_back(dx);
      grid.values.push_back(seg.eval(xm));
    }
  }
  return grid;
}

}  // namespace

PollutionConstruction construct_pollution_subspace(const OperatorModel& model,
                                                   double lambda_target, int k,
                                                   std::int64_t grid_cells) {
  if (model.kind == ModelKind::StokesH || model.profile.empty())
    throw UnsupportedError("the construction needs a multiplication model");
  if (k < 1) throw PreconditionError("k must be at least 1");
  const ExactSpectrum truth = exact_spectrum(model);
  if (truth.bands.size() < 2)
    throw PreconditionError("the profile has no spectral gap to pollute");
  const Interval gap{truth.bands[0].hi, truth.bands[1].lo};
  if (!(lambda_target > gap.lo && lambda_target < gap.hi))
    throw PreconditionError("lambda_target must lie inside the gap (" +
                            std::to_string(gap.lo) + ", " + std::to_string(gap.hi) +
                            ")");

  // Value windows strictly left/right of lambda, kept at distance >= 0.05,
  // split into k disjoint subwindows so the indicator vectors of consecutive
  // constructions stay mutually orthogonal.
  constexpr double kMargin = 0.05;
  const Interval below{truth.bands[0].lo,
                       std::min(truth.bands[0].hi, lambda_target - kMargin)};
  const Interval above{std::max(truth.bands[1].lo, lambda_target + kMargin),
                       truth.bands[1].hi};

  const WeightedGrid grid = make_profile_grid(model.profile, grid_cells);
  const std::size_t cells = grid.x.size();

  auto subwindow = [k](const Interval& window, int j) {
    const double step = window.length() / k;
    return Interval{window.lo + (j - 1) * step, window.lo + j * step};
  };
  auto select = [&](const Interval& window, int j) {
    const Interval sub = subwindow(window, j);
    std::vector<std::size_t> cells_in;
    for (std::size_t i = 0; i < cells; ++i) {
      const double a = grid.values[i];
      const bool inside = j == k ? (a >= sub.lo && a <= sub.hi)
                                 : (a >= sub.lo && a < sub.hi);
      if (inside) cells_in.push_back(i);
    }
    if (cells_in.empty())
      throw PreconditionError(
          "a value subwindow has empty preimage; lower k or refine the grid");
    return cells_in;
  };

  // Basis: indicator vectors for windows 1..k-1 on both sides, then the mixed
  // vector built from the k-th pair. All are orthonormal in the grid inner
  // product because their supports are disjoint.
  struct SparseVec {
    std::vector<std::size_t> idx;
    std::vector<double> val;
  };
  std::vector<SparseVec> basis;
  PollutionConstruction out;
  out.lambda_target = lambda_target;

  auto normalized_indicator = [&](const std::vector<std::size_t>& support) {
    double mass = 0.0;
    for (std::size_t i : support) mass += grid.w[i];
    SparseVec v;
    v.idx = support;
    v.val.assign(support.size(), 1.0 / std::sqrt(mass));
    return v;
  };
  auto rayleigh = [&](const SparseVec& v) {
    double num = 0.0, den = 0.0;
    for (std::size_t c = 0; c < v.idx.size(); ++c) {
      const std::size_t i = v.idx[c];
      num += grid.w[i] * grid.values[i] * v.val[c] * v.val[c];
      den += grid.w[i] * v.val[c] * v.val[c];
    }
    return num / den;
  };

  for (int j = 1; j < k; ++j) {
    const auto sup = select(below, j);
    basis.push_back(normalized_indicator(sup));
    out.minus_vectors.push_back({subwindow(below, j), static_cast<std::int64_t>(sup.size())});
  }
  for (int j = 1; j < k; ++j) {
    const auto sup = select(above, j);
    basis.push_back(normalized_indicator(sup));
    out.plus_vectors.push_back({subwindow(above, j), static_cast<std::int64_t>(sup.size())});
  }

  const auto sup_minus = select(below, k);
  const auto sup_plus = select(above, k);
  const SparseVec v_minus = normalized_indicator(sup_minus);
  const SparseVec v_plus = normalized_indicator(sup_plus);
  out.mu_minus = rayleigh(v_minus);
  out.mu_plus = rayleigh(v_plus);
  out.minus_vectors.push_back({subwindow(below, k), static_cast<std::int64_t>(sup_minus.size())});
  out.plus_vectors.push_back({subwindow(above, k), static_cast<std::int64_t>(sup_plus.size())});

  // u = sqrt((mu+ - l)/(mu+ - mu-)) v- + sqrt((l - mu-)/(mu+ - mu-)) v+ ,
  // which pins (A u, u) = lambda while keeping ||u|| = 1.
  const double span = out.mu_plus - out.mu_minus;
  const double weight_minus = std::sqrt((out.mu_plus - lambda_target) / span);
  const double weight_plus = std::sqrt((lambda_target - out.mu_minus) / span);
  SparseVec mixed;
  mixed.idx = v_minus.idx;
  mixed.val.resize(v_minus.val.size());
  for (std::size_t c = 0; c < v_minus.val.size(); ++c)
    mixed.val[c] = weight_minus * v_minus.val[c];
  mixed.idx.insert(mixed.idx.end(), v_plus.idx.begin(), v_plus.idx.end());
  for (double value : v_plus.val) mixed.val.push_back(weight_plus * value);
  basis.push_back(std::move(mixed));

  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(dim, dim);
  // (a b_c, b_r): nonzero only on shared support, i.e. on the diagonal and
  // between the mixed vector and nothing else (supports are disjoint).
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = r; c < dim; ++c) {
      double sum = 0.0;
      const SparseVec& br = basis[static_cast<std::size_t>(r)];
      const SparseVec& bc = basis[static_cast<std::size_t>(c)];
      std::map<std::size_t, double> sparse;
      for (std::size_t i = 0; i < br.idx.size(); ++i) sparse[br.idx[i]] = br.val[i];
      for (std::size_t i = 0; i < bc.idx.size(); ++i) {
        auto it = sparse.find(bc.idx[i]);
        if (it == sparse.end()) continue;
        const std::size_t cell = bc.idx[i];
        sum += grid.w[cell] * grid.values[cell] * it->second * bc.val[i];
      }
      projected(r, c) = sum;
      projected(c, r) = sum;
    }
  }
  out.projected = projected;

  Eigen::VectorXd unit = Eigen::VectorXd::Zero(dim);
  unit(dim - 1) = 1.0;
  out.verification_residual = (projected * unit - lambda_target * unit).norm();
  return out;
}

// ---------------------------------------------------------------------------
// Constructive spectrum push for the unbounded model.

double spectrum_push_delta_bound(double delta) {
  return delta * (2.0 - delta) / (1.0 - delta);
}

namespace {

struct ModeFunction {
  int mode = 0;                 // frequency k (signed)
  Eigen::Vector2cd coeff;      // (u, v) coefficients of e^{ikx}, unit norm
  double eigenvalue = 0.0;
};

Eigen::Vector2cd stokes_eigenvector(int mode, double lambda) {
  if (mode == 0)
    return lambda == 0.0 ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
  Eigen::Vector2cd v(1.0, Complex(0.0, mode) / (lambda - 2.0));
  return v / v.norm();
}

// Q_H restricted to a single exponential mode is the 2x2 Hermitian symbol.
Eigen::Matrix2cd stokes_symbol(int mode) {
  Eigen::Matrix2cd s;
  const double k2 = static_cast<double>(mode) * mode;
  s << Complex(k2, 0.0), Complex(0.0, -mode), Complex(0.0, mode), Complex(2.0, 0.0);
  return s;
}

std::vector<ModeFunction> lowest_stokes_eigenfunctions(int count) {
  std::vector<ModeFunction> out;
  for (int k = 0; k <= count + 2; ++k) {
    const auto [lo, hi] = stokes_eigenvalue_pair(k);
    if (k == 0) {
      out.push_back({0, stokes_eigenvector(0, 0.0), lo});
      out.push_back({0, stokes_eigenvector(0, 2.0), hi});
    } else {
      for (int sign : {1, -1}) {
        out.push_back({sign * k, stokes_eigenvector(sign * k, lo), lo});
        out.push_back({sign * k, stokes_eigenvector(sign * k, hi), hi});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ModeFunction& a, const ModeFunction& b) {
    return a.eigenvalue < b.eigenvalue;
  });
  out.resize(static_cast<std::size_t>(count));
  return out;
}

}  // namespace

PushReport push_spectrum(int low_mode_count, double epsilon, double floor_target,
                         std::int64_t max_frequency) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw PreconditionError("epsilon must lie in (0, 1)");
  if (!(floor_target > 0.0)) throw PreconditionError("the floor target must be positive");
  if (low_mode_count < 1) throw PreconditionError("need at least one basis mode");

  PushReport report;
  report.epsilon = epsilon;
  report.floor_target = floor_target;
  report.mode_count = low_mode_count;

  // Largest delta satisfying delta(2-delta)/(1-delta) < epsilon, backed off
  // from the exact root for a strict inequality.
  const double root =
      0.5 * ((2.0 + epsilon) - std::sqrt((2.0 + epsilon) * (2.0 + epsilon) - 4.0 * epsilon));
  const double delta = 0.99 * root;
  report.delta = delta;

  const std::vector<ModeFunction> low = lowest_stokes_eigenfunctions(low_mode_count);
  double form_bound = 0.0;
  for (const ModeFunction& f : low) form_bound = std::max(form_bound, f.eigenvalue);
  report.form_bound = form_bound;

  const double tau =
      (2.0 * (1.0 + delta) * (1.0 + delta) * (floor_target + 1.0) + 4.0 * form_bound) /
      (delta * delta);
  report.tau = tau;

  std::int64_t first_mode = static_cast<std::int64_t>(std::ceil(std::sqrt(tau)));
  // keep the perturbing modes disjoint from the base ones
  for (const ModeFunction& f : low)
    first_mode = std::max<std::int64_t>(first_mode, std::abs(f.mode) + 1);
  if (first_mode + low_mode_count - 1 > max_frequency)
    throw CapacityError("pushing the spectrum above " + std::to_string(floor_target) +
                        " needs frequency " + std::to_string(first_mode) +
                        " beyond the cutoff " + std::to_string(max_frequency));
  report.first_mode = static_cast<int>(first_mode);

  // Perturbations: plus-branch eigenfunctions at consecutive high frequencies,
  // scaled to norm delta. Distinct modes keep everything orthogonal.
  std::vector<ModeFunction> bumps;
  for (int l = 0; l < low_mode_count; ++l) {
    const int k = static_cast<int>(first_mode) + l;
    const auto [lo, hi] = stokes_eigenvalue_pair(k);
    ModeFunction f{k, stokes_eigenvector(k, hi), hi};
    f.coeff *= delta;
    bumps.push_back(f);
  }

  // Coordinate space over the union of participating modes, two components
  // per mode; inner products and the form are exact there.
  std::map<int, int> mode_slot;
  for (const ModeFunction& f : low) mode_slot.emplace(f.mode, 0);
  for (const ModeFunction& f : bumps) mode_slot.emplace(f.mode, 0);
  int slot = 0;
  for (auto& [mode, index] : mode_slot) index = slot++;
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(mode_slot.size());

  auto embed = [&](const ModeFunction& f) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    const int s = mode_slot.at(f.mode);
    v.segment<2>(2 * s) = f.coeff;
    return v;
  };

  const int m = low_mode_count;
  Eigen::MatrixXcd base(dim, m), perturbed(dim, m);
  for (int l = 0; l < m; ++l) {
    base.col(l) = embed(low[static_cast<std::size_t>(l)]);
    perturbed.col(l) = base.col(l) + embed(bumps[static_cast<std::size_t>(l)]);
  }

  // Gram data of the compression onto the perturbed span.
  Eigen::MatrixXcd symbol_applied(dim, m);
  for (int l = 0; l < m; ++l) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(dim);
    for (const auto& [mode, index] : mode_slot)
      w.segment<2>(2 * index) =
          stokes_symbol(mode) * perturbed.col(l).segment<2>(2 * index);
    symbol_applied.col(l) = w;
  }
  GramTriple compressed;
  compressed.g0 = perturbed.adjoint() * perturbed;
  compressed.g1 = perturbed.adjoint() * symbol_applied;
  // symmetrize away roundoff
  compressed.g1 = 0.5 * (compressed.g1 + compressed.g1.adjoint()).eval();
  const eig::FirstOrderResult spec = eig::solve_first_order(compressed);
  report.min_eigenvalue = spec.eigenvalues.front();

  // ||P - P'|| on the joint span, where both projections act nontrivially.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_base(base);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_pert(perturbed);
  Eigen::MatrixXcd q_base =
      qr_base.householderQ() * Eigen::MatrixXcd::Identity(dim, m);
  Eigen::MatrixXcd q_pert =
      qr_pert.householderQ() * Eigen::MatrixXcd::Identity(dim, m);
  Eigen::MatrixXcd diff = q_base * q_base.adjoint() - q_pert * q_pert.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff);
  report.projection_distance =
      es.eigenvalues().cwiseAbs().maxCoeff();
  return report;
}

// ---------------------------------------------------------------------------
// Truncation periodicity of the gap eigenvalues.

namespace {

std::vector<double> gap_values(const std::vector<double>& eigenvalues, Interval gap) {
  std::vector<double> out;
  for (double v : eigenvalues)
    if (v > gap.lo && v < gap.hi) out.push_back(v);
  return out;
}

double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return 0.0;
  double h = 0.0;
  auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (double y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  h = std::max(one_sided(a, b), one_sided(b, a));
  return h;
}

// Largest move of a value from one snapshot to its nearest match in the next.
double matched_step(const std::vector<double>& from, const std::vector<double>& to) {
  if (from.empty() || to.empty()) return 0.0;
  double worst = 0.0;
  for (double x : from) {
    double best = std::numeric_limits<double>::infinity();
    for (double y : to) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

PeriodicityReport periodicity_analysis(const OperatorModel& model, int n_first,
                                       int n_last, Interval gap) {
  if (!model.y_rational)
    throw PreconditionError(
        "periodicity analysis needs the discontinuity as an exact rational "
        "multiple of pi");
  if (model.kind == ModelKind::StokesH)
    throw UnsupportedError("periodicity analysis applies to the Fourier models");
  PeriodicityReport report;
  report.omega = omega_period(model.y_rational->p, model.y_rational->q);
  if (n_last - n_first + 1 < 3 * report.omega)
    throw PreconditionError("the N range must span at least three periods");

  for (int n = n_first; n <= n_last; ++n) {
    const GramTriple gram = fourier::assemble(model, fourier::Window::symmetric(n), false);
    const eig::FirstOrderResult spec = eig::solve_first_order(gram);
    report.families[n % report.omega].emplace_back(n, gap_values(spec.eigenvalues, gap));
  }

  double intra = 0.0;
  for (const auto& [residue, snapshots] : report.families) {
    for (std::size_t i = 0; i + 1 < snapshots.size(); ++i)
      intra = std::max(intra, matched_step(snapshots[i].second, snapshots[i + 1].second));
  }
  report.intra_family_spread = intra;

  double cross = std::numeric_limits<double>::infinity();
  for (auto it1 = report.families.begin(); it1 != report.families.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != report.families.end(); ++it2) {
      if (it1->second.empty() || it2->second.empty()) continue;
      cross = std::min(cross, hausdorff_distance(it1->second.front().second,
                                                 it2->second.front().second));
    }
  }
  if (!std::isfinite(cross)) cross = 0.0;
  report.cross_family_distance = cross;
  report.periodic = intra < 1e-2 && cross > 5e-2;
  return report;
}

// ---------------------------------------------------------------------------
// Log-log convergence rates against the exact eigenvalues.

namespace {

struct Sample {
  int n = 0;
  double error = 0.0;
};

// Trim solver-noise samples, then fit log error against log N. Samples below
// the floor are discarded; after that only the leading stretch that keeps
// decreasing by at least 2x per step is trusted.
std::optional<double> trimmed_slope(std::vector<Sample> samples, double floor,
                                    int& used) {
  std::erase_if(samples, [floor](const Sample& s) { return !(s.error > floor); });
  std::vector<Sample> kept;
  for (const Sample& s : samples) {
    if (!kept.empty() && !(s.error <= 0.5 * kept.back().error)) break;
    kept.push_back(s);
  }
  used = static_cast<int>(kept.size());
  if (kept.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const Sample& s : kept) {
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::log(s.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(kept.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ConvergenceReport convergence_rates(fem::SpaceSpec space_u, fem::SpaceSpec space_v,
                                    const std::vector<int>& n_list,
                                    const std::vector<std::int64_t>& k_list,
                                    bool with_second_order) {
  if (n_list.size() < 2) throw PreconditionError("need at least two mesh sizes");

  struct Run {
    std::vector<double> first;
    std::vector<Complex> second;  // residual-passing points only
  };
  std::vector<Run> runs;
  runs.reserve(n_list.size());
  for (int n : n_list) {
    const fem::PeriodicMesh mesh = fem::make_mesh(n);
    const fem::FemSpace su = fem::FemSpace::make(mesh, space_u);
    const fem::FemSpace sv = fem::FemSpace::make(mesh, space_v);
    Run run;
    run.first = eig::solve_first_order(fem::assemble_stokes_first_order(su, sv)).eigenvalues;
    if (with_second_order) {
      const eig::SecondOrderResult spec2 =
          eig::solve_second_order(fem::assemble_stokes_second_order(su, sv));
      for (std::size_t i = 0; i < spec2.size(); ++i)
        if (spec2.passes(i)) run.second.push_back(spec2.points[i]);
    }
    runs.push_back(std::move(run));
  }

  ConvergenceReport report;
  constexpr double kMatchWindow = 0.5;
  for (std::int64_t k : k_list) {
    const auto [minus, plus] = stokes_eigenvalue_pair(k);
    for (const auto& [series, target] : {std::pair{'-', minus}, std::pair{'+', plus}}) {
      RateEntry entry;
      entry.k = k;
      entry.series = series;
      entry.target = target;
      const double noise_floor = 1e-12 * std::max(1.0, std::abs(target));

      std::vector<Sample> first_err, re_err, im_err;
      for (std::size_t r = 0; r < runs.size(); ++r) {
        double best = std::numeric_limits<double>::infinity();
        for (double v : runs[r].first) best = std::min(best, std::abs(v - target));
        if (best > kMatchWindow) {
          entry.matched = false;
          continue;
        }
        first_err.push_back({n_list[r], best});
        if (!with_second_order) continue;
        double best_re = std::numeric_limits<double>::infinity();
        Complex best_z;
        for (const Complex& z : runs[r].second) {
          if (std::abs(z.real() - target) < best_re) {
            best_re = std::abs(z.real() - target);
            best_z = z;
          }
        }
        if (best_re > kMatchWindow) {
          entry.matched = false;
          continue;
        }
        re_err.push_back({n_list[r], best_re});
        im_err.push_back({n_list[r], std::abs(best_z.imag())});
      }
      entry.first_order_slope = trimmed_slope(first_err, noise_floor,
                                              entry.first_order_samples);
      if (with_second_order) {
        int used_re = 0, used_im = 0;
        entry.second_re_slope = trimmed_slope(re_err, noise_floor, used_re);
        entry.second_im_slope = trimmed_slope(im_err, noise_floor, used_im);
        entry.second_samples = used_im;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace specpol::analysis
