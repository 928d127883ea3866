// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "specpol/analysis.hpp"
#include "specpol/errors.hpp"
#include "specpol/fourier.hpp"
#include "specpol/models.hpp"

using namespace specpol;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

eig::SecondOrderResult synthetic_points(const std::vector<Complex>& pts) {
  eig::SecondOrderResult r;
  for (const Complex& z : pts) {
    r.points.push_back(z);
    r.residuals.push_back(0.0);
    r.enclosures.push_back(enclosure(z));
  }
  return r;
}

eig::FirstOrderResult synthetic_values(const std::vector<double>& vals) {
  eig::FirstOrderResult r;
  r.eigenvalues = vals;
  r.residuals.assign(vals.size(), 0.0);
  return r;
}

}  // namespace

TEST_CASE("enclosure intervals") {
  CHECK(enclosure({2.0, 0.0}).lo == doctest::Approx(2.0));
  CHECK(enclosure({2.0, 0.0}).hi == doctest::Approx(2.0));
  const Interval e = enclosure({0.6085, 0.0442});
  CHECK(e.lo == doctest::Approx(0.5643));
  CHECK(e.hi == doctest::Approx(0.6527));
  const Interval w = enclosure({1.0, -3.0});
  CHECK(w.lo == doctest::Approx(-2.0));
  CHECK(w.hi == doctest::Approx(4.0));
}

TEST_CASE("enclosure verification flags a point with an empty certificate") {
  const ExactSpectrum truth = exact_spectrum(make_multiplication_model(0.0));
  const auto points = synthetic_points({{0.0, 0.1}, {2.5, 0.3}});
  const auto report = analysis::verify_enclosures(points, truth);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == 0);  // [-0.1, 0.1] misses both bands
}

TEST_CASE("enclosure soundness on the multiplication model at N=101") {
  const OperatorModel model = make_multiplication_model(0.0);
  const auto gram = fourier::assemble(model, fourier::Window::symmetric(101), true);
  const auto spec2 = eig::solve_second_order(gram);
  const auto report = analysis::verify_enclosures(spec2, exact_spectrum(model));
  CHECK(report.checked > 0);
  CHECK(report.pass());

  const auto disk = analysis::disk_exclusion(spec2, {-1.0, 1.0});
  CHECK(disk.pass());
}

TEST_CASE("disk exclusion flags an interior point") {
  const auto points = synthetic_points({{1.5, 0.1}, {0.9, 0.0}, {2.05, 0.0}});
  const auto report = analysis::disk_exclusion(points, {1.0, 2.0});
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0] == 0);
}

TEST_CASE("classification of the constant model") {
  const auto report = analysis::classify(synthetic_values({2.0}),
                                         synthetic_points({{2.0, 0.0}}));
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].label == analysis::Label::confirmed);
  CHECK(report.entries[0].dist_re == doctest::Approx(0.0));
}

TEST_CASE("empty second-order set makes everything suspect") {
  const auto report =
      analysis::classify(synthetic_values({-0.5, 0.5}), synthetic_points({}));
  for (const auto& e : report.entries) CHECK(e.label == analysis::Label::suspect);
  CHECK(report.confirmed().empty());
  CHECK(report.suspect().size() == 2);
}

TEST_CASE("a certificate for nearby essential spectrum does not confirm") {
  // the point hugs the band edge at -1; its enclosure excludes lambda
  const auto report = analysis::classify(synthetic_values({-0.9842}),
                                         synthetic_points({{-1.0004, 0.0004}}));
  CHECK(report.entries[0].label == analysis::Label::suspect);
}

TEST_CASE("shrinking thresholds never confirms more") {
  const auto first = synthetic_values({-0.9, -0.3, 0.2, 0.8});
  const auto second = synthetic_points(
      {{-0.91, 0.03}, {-0.28, 0.005}, {0.75, 0.2}, {1.4, 0.01}});
  auto labels = [&](double dre, double dim) {
    std::vector<analysis::Label> out;
    for (const auto& e : analysis::classify(first, second, dre, dim).entries)
      out.push_back(e.label);
    return out;
  };
  const auto wide = labels(0.06, 0.06);
  for (double shrink : {0.5, 0.2, 0.05}) {
    const auto narrow = labels(0.06 * shrink, 0.06 * shrink);
    for (std::size_t i = 0; i < wide.size(); ++i) {
      if (wide[i] == analysis::Label::suspect)
        CHECK(narrow[i] == analysis::Label::suspect);
    }
  }
}

TEST_CASE("pollution construction pins the target eigenvalue") {
  const OperatorModel model = make_multiplication_model(0.0);
  for (double lambda : {0.0, 0.99}) {
    CAPTURE(lambda);
    const auto built = analysis::construct_pollution_subspace(model, lambda, 3);
    CHECK(built.verification_residual <= 1e-8);
    CHECK(built.mu_minus < lambda);
    CHECK(built.mu_plus > lambda);
    CHECK(built.minus_vectors.size() == 3);
    CHECK(built.plus_vectors.size() == 3);
    // the proof's weight identity: (A u, u) = lambda exactly
    const Eigen::Index last = built.projected.rows() - 1;
    CHECK(built.projected(last, last) == doctest::Approx(lambda).epsilon(1e-12));
  }
}

TEST_CASE("pollution construction sweeps the gap") {
  const OperatorModel model = make_multiplication_model(0.0);
  for (double lambda = -0.9; lambda <= 0.901; lambda += 0.3) {
    const auto built = analysis::construct_pollution_subspace(model, lambda, 2, 4000);
    CHECK(built.verification_residual <= 1e-8);
  }
}

TEST_CASE("pollution construction rejects targets outside the gap") {
  const OperatorModel model = make_multiplication_model(0.0);
  CHECK_THROWS_AS(analysis::construct_pollution_subspace(model, 1.5, 3),
                  PreconditionError);
  CHECK_THROWS_AS(analysis::construct_pollution_subspace(model, -1.2, 3),
                  PreconditionError);
  CHECK_THROWS_AS(analysis::construct_pollution_subspace(make_stokes_model(), 0.0, 3),
                  UnsupportedError);
}

TEST_CASE("projection-perturbation bound values") {
  CHECK(analysis::spectrum_push_delta_bound(0.05) ==
        doctest::Approx(0.10263157894736842).epsilon(1e-15));  // rejected for 0.1
  CHECK(analysis::spectrum_push_delta_bound(0.05) > 0.1);
  CHECK(analysis::spectrum_push_delta_bound(0.045) ==
        doctest::Approx(0.09212041884816754).epsilon(1e-15));  // accepted for 0.1
  CHECK(analysis::spectrum_push_delta_bound(0.045) < 0.1);
}

TEST_CASE("push_spectrum meets both inequalities") {
  {
    const auto report = analysis::push_spectrum(5, 0.1, 100.0);
    CHECK(report.projection_distance < 0.1);
    CHECK(report.min_eigenvalue > 100.0);
    CHECK(analysis::spectrum_push_delta_bound(report.delta) < 0.1);
  }
  {
    const auto report = analysis::push_spectrum(5, 0.5, 10.0);
    CHECK(report.projection_distance < 0.5);
    CHECK(report.min_eigenvalue > 10.0);
  }
}

TEST_CASE("push_spectrum capacity error") {
  CHECK_THROWS_AS(analysis::push_spectrum(5, 0.1, 1e9, 1000), CapacityError);
  CHECK_THROWS_AS(analysis::push_spectrum(5, 1.5, 10.0), PreconditionError);
}

TEST_CASE("periodicity of the y = -pi/3 truncations") {
  const OperatorModel model = make_multiplication_model(RationalAngle{1, 3});
  const auto report = analysis::periodicity_analysis(model, 120, 131);
  CHECK(report.omega == 3);
  CHECK(report.families.size() == 3);
  CHECK(report.intra_family_spread < 1e-2);
  CHECK(report.cross_family_distance > 5e-2);
  CHECK(report.periodic);
}

TEST_CASE("periodicity of the constant model is a single flat trajectory") {
  OperatorModel model = make_constant_model(0.0);
  const auto report = analysis::periodicity_analysis(model, 8, 15);
  CHECK(report.omega == 2);
  CHECK(report.intra_family_spread == doctest::Approx(0.0));
  for (const auto& [residue, snapshots] : report.families)
    for (const auto& [n, values] : snapshots)
      for (double v : values) CHECK(v == doctest::Approx(0.0));
}

TEST_CASE("periodicity preconditions") {
  OperatorModel no_rational = make_multiplication_model(0.1);
  CHECK_THROWS_AS(analysis::periodicity_analysis(no_rational, 100, 120),
                  PreconditionError);
  const OperatorModel model = make_multiplication_model(RationalAngle{1, 3});
  CHECK_THROWS_AS(analysis::periodicity_analysis(model, 100, 104), PreconditionError);
}

TEST_CASE("first-order convergence rate of the linear pair") {
  const auto report = analysis::convergence_rates(
      {fem::Family::lagrange, 1}, {fem::Family::lagrange, 1}, {16, 32, 64}, {1, 2},
      false);
  REQUIRE(report.entries.size() == 4);
  for (const auto& entry : report.entries) {
    CAPTURE(entry.k);
    CAPTURE(entry.series);
    REQUIRE(entry.first_order_slope.has_value());
    CHECK(*entry.first_order_slope == doctest::Approx(-2.0).epsilon(0.35));
  }
}

TEST_CASE("second-order rates of the mixed pair") {
  const auto report = analysis::convergence_rates(
      {fem::Family::hermite, 3}, {fem::Family::lagrange, 1}, {8, 16, 32}, {1}, true);
  for (const auto& entry : report.entries) {
    REQUIRE(entry.first_order_slope.has_value());
    CHECK(*entry.first_order_slope == doctest::Approx(-4.0).epsilon(0.25));
    REQUIRE(entry.second_im_slope.has_value());
    CHECK(*entry.second_im_slope == doctest::Approx(-2.0).epsilon(0.35));
  }
}
