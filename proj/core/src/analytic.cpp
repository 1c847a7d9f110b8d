#include "zenolse/analytic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zenolse/errors.hpp"

namespace zenolse {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

void check_breather_parameter(double a) {
  if (!(a > 0.0 && a < 0.5)) {
    std::ostringstream msg;
    msg << "akhmediev breather: parameter a must lie in (0, 0.5), got " << a;
    throw ConfigError(msg.str());
  }
}
}  // namespace

double AkhmedievBreather::lambda() const {
  check_breather_parameter(a);
  return 2.0 * std::sqrt(1.0 - 2.0 * a);
}

double AkhmedievBreather::b() const {
  check_breather_parameter(a);
  return std::sqrt(8.0 * a * (1.0 - 2.0 * a));
}

double AkhmedievBreather::spatial_period() const {
  return 2.0 * std::numbers::pi / lambda();
}

std::string solution_name(const AnalyticSolution& solution) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlaneWave>) return "plane_wave";
        if constexpr (std::is_same_v<T, AkhmedievBreather>)
          return "akhmediev_breather";
        if constexpr (std::is_same_v<T, Peregrine>) return "peregrine";
        if constexpr (std::is_same_v<T, AkhmedievPeregrine>)
          return "akhmediev_peregrine";
      },
      solution);
}

std::complex<double> eval_plane_wave(double /*x*/, double t) {
  return std::polar(1.0, t);
}

std::complex<double> eval_akhmediev_breather(double a, double x, double t) {
  check_breather_parameter(a);
  const double lambda = 2.0 * std::sqrt(1.0 - 2.0 * a);
  const double b = std::sqrt(8.0 * a * (1.0 - 2.0 * a));
  const std::complex<double> numerator =
      2.0 * (1.0 - 2.0 * a) * std::cosh(b * t) + kI * b * std::sinh(b * t);
  const double denominator =
      std::sqrt(2.0 * a) * std::cos(lambda * x) - std::cosh(b * t);
  if (std::abs(denominator) < 1e-14) {
    throw NumericError("akhmediev breather: denominator vanished");
  }
  return (1.0 + numerator / denominator) * std::polar(1.0, t);
}

std::complex<double> eval_peregrine(double x, double t) {
  const double denominator = 1.0 + 4.0 * x * x + 4.0 * t * t;
  const std::complex<double> rational =
      4.0 * std::complex<double>{1.0, 2.0 * t} / denominator;
  return (1.0 - rational) * std::polar(1.0, t);
}

std::complex<double> eval_akhmediev_peregrine(double x, double t) {
  const double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
  const double t2 = t * t, t4 = t2 * t2, t6 = t4 * t2;
  const double g = 3.0 / 8.0 - 3.0 * x2 - 2.0 * x4 - 9.0 * t2 - 10.0 * t4 -
                   12.0 * x2 * t2;
  const double h = 15.0 / 4.0 + 6.0 * x2 - 4.0 * x4 - 2.0 * t2 - 4.0 * t4 -
                   8.0 * x2 * t2;
  const double d =
      (3.0 / 4.0 + 9.0 * x2 + 4.0 * x4 + (16.0 / 3.0) * x6 + 33.0 * t2 +
       36.0 * t4 + (16.0 / 3.0) * t6 - 24.0 * x2 * t2 + 16.0 * x4 * t2 +
       16.0 * x2 * t4) /
      8.0;
  if (std::abs(d) < 1e-14) {
    throw NumericError("akhmediev-peregrine: denominator vanished");
  }
  return (1.0 + (g + kI * t * h) / d) * std::polar(1.0, t);
}

std::complex<double> eval_solution(const AnalyticSolution& solution, double x,
                                   double t) {
  return std::visit(
      [x, t](const auto& s) -> std::complex<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlaneWave>) return eval_plane_wave(x, t);
        if constexpr (std::is_same_v<T, AkhmedievBreather>)
          return eval_akhmediev_breather(s.a, x, t);
        if constexpr (std::is_same_v<T, Peregrine>) return eval_peregrine(x, t);
        if constexpr (std::is_same_v<T, AkhmedievPeregrine>)
          return eval_akhmediev_peregrine(x, t);
      },
      solution);
}

ComplexField sample_on_grid(const AnalyticSolution& solution,
                            std::shared_ptr<const Grid> grid, double t) {
  ComplexField field;
  field.grid = std::move(grid);
  field.time = t;
  const std::size_t m = field.grid->num_points();
  field.values.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    field.values[i] = eval_solution(solution, field.grid->x(i), t);
  }
  require_finite(field, "sample_on_grid");
  return field;
}

double nlse_residual(const AnalyticSolution& solution, double x, double t,
                     double h) {
  if (!(h >= 1e-5 && h <= 1e-2)) {
    throw ConfigError("nlse_residual: h must lie in [1e-5, 1e-2]");
  }
  const auto psi = eval_solution(solution, x, t);
  const auto psi_tp = eval_solution(solution, x, t + h);
  const auto psi_tm = eval_solution(solution, x, t - h);
  const auto psi_xp = eval_solution(solution, x + h, t);
  const auto psi_xm = eval_solution(solution, x - h, t);
  const auto dpsi_dt = (psi_tp - psi_tm) / (2.0 * h);
  const auto d2psi_dx2 = (psi_xp - 2.0 * psi + psi_xm) / (h * h);
  return std::abs(kI * dpsi_dt + 0.5 * d2psi_dx2 + std::norm(psi) * psi);
}

}  // namespace zenolse
