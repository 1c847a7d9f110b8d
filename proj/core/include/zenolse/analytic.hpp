#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>

#include "zenolse/grid.hpp"

namespace zenolse {

// Closed-form solutions of i psi_t + (1/2) psi_xx + |psi|^2 psi = 0, all
// riding on the unit plane-wave background exp(i t).

struct PlaneWave {};

/// Spatially periodic breather with free parameter a in (0, 1/2).
/// lambda = 2 sqrt(1-2a) fixes the spatial period 2*pi/lambda and
/// b = sqrt(8a(1-2a)) the temporal growth rate.
struct AkhmedievBreather {
  double a = 0.45;
  double lambda() const;
  double b() const;
  double spatial_period() const;
};

/// First-order rational soliton; peak amplitude 3 at the origin.
struct Peregrine {};

/// Second-order rational soliton; peak amplitude 5 at the origin.
struct AkhmedievPeregrine {};

using AnalyticSolution =
    std::variant<PlaneWave, AkhmedievBreather, Peregrine, AkhmedievPeregrine>;

std::string solution_name(const AnalyticSolution& solution);

std::complex<double> eval_plane_wave(double x, double t);

/// Throws ConfigError unless 0 < a < 0.5; throws NumericError if the
/// denominator vanishes (cannot happen at real arguments for a < 0.5,
/// guarded anyway).
std::complex<double> eval_akhmediev_breather(double a, double x, double t);

std::complex<double> eval_peregrine(double x, double t);

/// Throws NumericError if the rational denominator underflows.
std::complex<double> eval_akhmediev_peregrine(double x, double t);

std::complex<double> eval_solution(const AnalyticSolution& solution, double x,
                                   double t);

/// Samples the closed form on every grid point at time t.
ComplexField sample_on_grid(const AnalyticSolution& solution,
                            std::shared_ptr<const Grid> grid, double t);

/// Central-finite-difference residual |i psi_t + (1/2) psi_xx + |psi|^2 psi|
/// with step h; O(h^2) for exact solutions. Independent of the evaluators'
/// algebra only through the pointwise samples it requests.
double nlse_residual(const AnalyticSolution& solution, double x, double t,
                     double h);

}  // namespace zenolse
