#include "zenolse/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "zenolse/errors.hpp"

namespace zenolse {

namespace {
// Commensurability tolerance on (t1 - t0)/dt, in units of one step.
constexpr double kStepTolerance = 5e-7;
}  // namespace

std::size_t commensurate_steps(double t0, double t1, double dt,
                               const std::string& context) {
  if (dt == 0.0 || !std::isfinite(dt)) {
    throw ConfigError(context + ": dt must be nonzero and finite");
  }
  const double ratio = (t1 - t0) / dt;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > kStepTolerance) {
    std::ostringstream msg;
    msg << context << ": interval " << (t1 - t0)
        << " is not a whole number of steps of dt = " << dt << " (" << ratio
        << " steps)";
    throw ConfigError(msg.str());
  }
  if (rounded < 0.0) {
    std::ostringstream msg;
    msg << context << ": interval " << (t1 - t0) << " opposes the sign of dt = "
        << dt;
    throw ConfigError(msg.str());
  }
  return static_cast<std::size_t>(rounded);
}

SsfmSolver::SsfmSolver(std::shared_ptr<const Grid> grid)
    : grid_(std::move(grid)),
      fft_(grid_->num_points()),
      freq_(grid_->num_points()),
      phase_(grid_->num_points()),
      dt_cached_(std::numeric_limits<double>::quiet_NaN()) {}

void SsfmSolver::apply_nonlinear(std::vector<std::complex<double>>& v,
                                 double dt) const {
  for (auto& value : v) {
    value *= std::polar(1.0, std::norm(value) * dt);
  }
}

void SsfmSolver::apply_linear(std::vector<std::complex<double>>& v, double dt) {
  if (dt != dt_cached_) {
    const auto k = grid_->wavenumbers();
    for (std::size_t i = 0; i < k.size(); ++i) {
      phase_[i] = std::polar(1.0, -0.5 * k[i] * k[i] * dt);
    }
    dt_cached_ = dt;
  }
  fft_.forward(v, freq_);
  for (std::size_t i = 0; i < freq_.size(); ++i) freq_[i] *= phase_[i];
  fft_.inverse(freq_, v);
}

void SsfmSolver::step_in_place(std::vector<std::complex<double>>& v,
                               const SsfmParams& params) {
  switch (params.splitting) {
    case Splitting::Lie:
      apply_nonlinear(v, params.dt);
      apply_linear(v, params.dt);
      break;
    case Splitting::Strang:
      apply_linear(v, 0.5 * params.dt);
      apply_nonlinear(v, params.dt);
      apply_linear(v, 0.5 * params.dt);
      break;
  }
}

ComplexField SsfmSolver::nonlinear_substep(const ComplexField& field,
                                           double dt) {
  ComplexField out = field;
  for (auto& value : out.values) {
    value *= std::polar(1.0, std::norm(value) * dt);
  }
  return out;
}

ComplexField SsfmSolver::linear_substep(const ComplexField& field, double dt) {
  ComplexField out = field;
  apply_linear(out.values, dt);
  return out;
}

ComplexField SsfmSolver::ssfm_step(const ComplexField& field,
                                   const SsfmParams& params) {
  ComplexField out = field;
  step_in_place(out.values, params);
  out.time = field.time + params.dt;
  return out;
}

SsfmSolver::EvolveResult SsfmSolver::evolve(const ComplexField& field,
                                            double t_end,
                                            const SsfmParams& params) {
  if (!field.grid->same_layout(*grid_)) {
    throw ConfigError("evolve: field grid does not match the solver grid");
  }
  const double t0 = field.time;
  const std::size_t steps = commensurate_steps(t0, t_end, params.dt, "evolve");

  EvolveResult result;
  result.final_field = field;
  auto record = [&](std::size_t step_index) {
    if (params.record_every == 0) return;
    if (step_index % params.record_every != 0) return;
    ComplexField snap = result.final_field;
    snap.time = t0 + static_cast<double>(step_index) * params.dt;
    result.snapshots.push_back(std::move(snap));
  };

  record(0);
  for (std::size_t s = 1; s <= steps; ++s) {
    step_in_place(result.final_field.values, params);
    result.final_field.time = t0 + static_cast<double>(s) * params.dt;
    record(s);
  }
  result.final_field.time = t_end;
  require_finite(result.final_field, "evolve");
  return result;
}

}  // namespace zenolse
