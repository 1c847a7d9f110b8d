#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "zenolse/analytic.hpp"
#include "zenolse/errors.hpp"
#include "zenolse/fft.hpp"
#include "zenolse/grid.hpp"

using namespace zenolse;

TEST_CASE("make_grid basics") {
  const auto grid = make_grid(2048, -20.0, 20.0);
  CHECK(grid->num_points() == 2048);
  CHECK(grid->dx() == doctest::Approx(40.0 / 2048).epsilon(1e-15));
  CHECK(grid->x(0) == -20.0);
  CHECK(grid->wavenumbers()[0] == 0.0);

  const auto small = make_grid(16, 0.0, 16.0);
  CHECK(small->wavenumbers()[1] ==
        doctest::Approx(2.0 * std::numbers::pi / 16.0).epsilon(1e-15));
  // Signed FFT index layout: [0 .. M/2-1, -M/2 .. -1].
  CHECK(small->wavenumbers()[8] ==
        doctest::Approx(-8.0 * 2.0 * std::numbers::pi / 16.0).epsilon(1e-15));
  CHECK(small->wavenumbers()[15] ==
        doctest::Approx(-2.0 * std::numbers::pi / 16.0).epsilon(1e-15));
}

TEST_CASE("make_grid rejects bad parameters") {
  CHECK_THROWS_AS(make_grid(15, -20.0, 20.0), ConfigError);
  CHECK_THROWS_AS(make_grid(1000, -20.0, 20.0), ConfigError);
  CHECK_THROWS_AS(make_grid(8, -20.0, 20.0), ConfigError);
  CHECK_THROWS_AS(make_grid(2048, 20.0, 20.0), ConfigError);
  CHECK_THROWS_AS(make_grid(2048, 20.0, -20.0), ConfigError);
}

TEST_CASE("integrate_density on constant and zero fields") {
  const auto grid = make_grid(2048, -20.0, 20.0);
  ComplexField ones{grid, std::vector<std::complex<double>>(2048, {1.0, 0.0}),
                    0.0};
  const double full = integrate_density(ones);
  CHECK(full == doctest::Approx(40.0).epsilon(1e-12));

  // Uniform density: a [-5, 5] window holds its length, within one dx.
  const double window_part = integrate_density(ones, Window{-5.0, 5.0});
  CHECK(std::abs(window_part - 10.0) <= grid->dx() + 1e-12);

  ComplexField zeros{grid, std::vector<std::complex<double>>(2048, {0.0, 0.0}),
                     0.0};
  CHECK(integrate_density(zeros, Window{-5.0, 5.0}) == 0.0);
}

TEST_CASE("windowed density matches an adaptive-quadrature oracle") {
  const auto grid = make_grid(2048, -20.0, 20.0);
  const auto field = sample_on_grid(Peregrine{}, grid, 0.0);
  const double rect = integrate_density(field, Window{-0.8, 0.8});
  const double oracle = test_support::adaptive_simpson(
      [](double x) { return std::norm(eval_peregrine(x, 0.0)); }, -0.8, 0.8);
  CHECK(rect == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("window validation") {
  const auto grid = make_grid(2048, -20.0, 20.0);
  const ComplexField field{
      grid, std::vector<std::complex<double>>(2048, {1.0, 0.0}), 0.0};
  CHECK_THROWS_AS(integrate_density(field, Window{5.0, -5.0}), ConfigError);
  CHECK_THROWS_AS(integrate_density(field, Window{-25.0, 5.0}), ConfigError);
  CHECK_THROWS_AS(integrate_density(field, Window{5.0, 21.0}), ConfigError);
  // Right edge must stay inside the half-open domain.
  CHECK_THROWS_AS(integrate_density(field, Window{5.0, 20.0}), ConfigError);
  // A window narrower than two grid spacings has too few interior points.
  CHECK_THROWS_AS(integrate_density(field, Window{0.0, 0.01}), ConfigError);
}

TEST_CASE("full-domain integral equals the plain sum exactly") {
  const auto grid = make_grid(256, -20.0, 20.0);
  const auto field = sample_on_grid(Peregrine{}, grid, 0.3);
  double sum = 0.0;
  for (const auto& v : field.values) sum += std::norm(v);
  CHECK(integrate_density(field) == sum * grid->dx());
}

TEST_CASE("windows partitioning the domain are additive") {
  const auto grid = make_grid(2048, -20.0, 20.0);
  const auto field = sample_on_grid(AkhmedievPeregrine{}, grid, 0.4);
  const double full = integrate_density(field);
  // Split exactly between grid points: [-20, 0-dx] and [0, right edge].
  const double left = integrate_density(
      field, Window{-20.0, -0.5 * grid->dx()});
  const double right = integrate_density(
      field, Window{0.0 - 0.5 * grid->dx(), grid->x(2047)});
  CHECK(left + right == doctest::Approx(full).epsilon(1e-12));
}

TEST_CASE("Parseval under the documented FFT normalization") {
  const auto grid = make_grid(512, -20.0, 20.0);
  const auto field = test_support::random_smooth_field(grid, 11u);
  Fft fft(512);
  std::vector<std::complex<double>> hat(512);
  fft.forward(field.values, hat);
  double x_sum = 0.0, k_sum = 0.0;
  for (const auto& v : field.values) x_sum += std::norm(v);
  for (const auto& v : hat) k_sum += std::norm(v);
  CHECK(grid->dx() * x_sum ==
        doctest::Approx(grid->dx() * k_sum / 512.0).epsilon(1e-12));
}

TEST_CASE("fft round trip") {
  const auto grid = make_grid(64, 0.0, 1.0);
  const auto field = test_support::random_smooth_field(grid, 3u, 5, 0.3);
  Fft fft(64);
  std::vector<std::complex<double>> hat(64), back(64);
  fft.forward(field.values, hat);
  fft.inverse(hat, back);
  CHECK(test_support::max_abs_diff(field.values, back) < 1e-13);
}

TEST_CASE("require_finite flags bad fields") {
  const auto grid = make_grid(16, 0.0, 16.0);
  ComplexField field{grid, std::vector<std::complex<double>>(16, {1.0, 0.0}),
                     0.0};
  CHECK_NOTHROW(require_finite(field, "test"));
  field.values[7] = {std::nan(""), 0.0};
  CHECK_THROWS_AS(require_finite(field, "test"), NumericError);
}
