#include "zenolse/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "zenolse/errors.hpp"

namespace zenolse {

namespace {

constexpr double kSurvivalFloor = 1e-300;

struct WindowSums {
  double window = 0.0;
  double total = 0.0;
};

WindowSums density_sums(const ComplexField& field, std::size_t first,
                        std::size_t last) {
  WindowSums sums;
  const auto& v = field.values;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = std::norm(v[i]);
    sums.total += d;
    if (i >= first && i <= last) sums.window += d;
  }
  sums.window *= field.grid->dx();
  sums.total *= field.grid->dx();
  return sums;
}

void truncate_outside(ComplexField& field, std::size_t first,
                      std::size_t last) {
  for (std::size_t i = 0; i < first; ++i) field.values[i] = 0.0;
  for (std::size_t i = last + 1; i < field.values.size(); ++i)
    field.values[i] = 0.0;
}

/// Median of |psi| over the middle half of the window.
double background_level(const ComplexField& field, std::size_t first,
                        std::size_t last) {
  const std::size_t span = last - first + 1;
  const std::size_t lo = first + span / 4;
  const std::size_t hi = last - span / 4;
  std::vector<double> magnitudes;
  magnitudes.reserve(hi - lo + 1);
  for (std::size_t i = lo; i <= hi; ++i)
    magnitudes.push_back(std::abs(field.values[i]));
  const std::size_t mid = magnitudes.size() / 2;
  std::nth_element(magnitudes.begin(), magnitudes.begin() + mid,
                   magnitudes.end());
  return magnitudes[mid];
}

/// |psi| scaled to a unit density integral, for shape comparisons.
std::vector<double> normalized_profile(const ComplexField& field) {
  double total = 0.0;
  for (const auto& v : field.values) total += std::norm(v);
  total *= field.grid->dx();
  const double scale = total > 0.0 ? 1.0 / std::sqrt(total) : 0.0;
  std::vector<double> profile(field.values.size());
  for (std::size_t i = 0; i < profile.size(); ++i)
    profile[i] = std::abs(field.values[i]) * scale;
  return profile;
}

double max_abs_difference(const std::vector<double>& a,
                          const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

ProjectionResult project(const ComplexField& field, const Window& window,
                         ProjectionMode mode) {
  require_finite(field, "project");
  const auto [first, last] = window_index_range(*field.grid, window);
  const auto sums = density_sums(field, first, last);
  if (sums.total <= 0.0) {
    throw NumericError("project: field carries no density");
  }

  ProjectionResult result{field, sums.window / sums.total};
  truncate_outside(result.field, first, last);
  if (mode == ProjectionMode::Normalized) {
    if (sums.window < kSurvivalFloor) {
      throw NumericError("project: state lost (window density underflow)");
    }
    const double scale = 1.0 / std::sqrt(sums.window);
    for (std::size_t i = first; i <= last; ++i) result.field.values[i] *= scale;
  }
  return result;
}

ZenoResult run_zeno(const ComplexField& initial, const ZenoSchedule& schedule,
                    const SsfmParams& params, SsfmSolver& solver) {
  if (schedule.num_measurements < 1) {
    throw ConfigError("zeno: schedule needs at least one measurement");
  }
  if (!(schedule.t_end > schedule.t_start)) {
    throw ConfigError("zeno: t_end must exceed t_start");
  }
  if (std::abs(initial.time - schedule.t_start) >
      1e-9 * std::max(1.0, std::abs(schedule.t_start))) {
    std::ostringstream msg;
    msg << "zeno: initial field time " << initial.time
        << " does not match schedule start " << schedule.t_start;
    throw ConfigError(msg.str());
  }
  const auto n_meas = schedule.num_measurements;
  const double interval =
      (schedule.t_end - schedule.t_start) / static_cast<double>(n_meas);
  const std::size_t steps_per_interval = commensurate_steps(
      0.0, interval, params.dt, "zeno: inter-measurement interval");
  if (steps_per_interval == 0) {
    throw ConfigError("zeno: more measurements than solver steps");
  }
  const auto [first, last] =
      window_index_range(*initial.grid, schedule.window);

  ZenoResult result;
  // Preparation: the cycle starts from the truncated state at t_start.
  // Amplitudes are kept as-is so the dynamics stay at the physical scale;
  // this projection is not a numbered measurement.
  result.final_field = initial;
  require_finite(result.final_field, "zeno");
  truncate_outside(result.final_field, first, last);
  result.final_field.time = schedule.t_start;

  auto keep_snapshot = [&](std::size_t measurement_index) {
    if (params.record_every == 0) return false;
    return (measurement_index * steps_per_interval) % params.record_every == 0;
  };
  if (keep_snapshot(0)) result.snapshots.push_back(result.final_field);

  SsfmParams stepper = params;
  stepper.record_every = 0;

  auto previous_profile = normalized_profile(result.final_field);
  double cumulative = 1.0;
  result.records.reserve(n_meas);

  for (std::size_t n = 1; n <= n_meas; ++n) {
    const double t_target =
        schedule.t_start + static_cast<double>(n) * interval;
    result.final_field =
        solver.evolve(result.final_field, t_target, stepper).final_field;

    const auto sums = density_sums(result.final_field, first, last);
    if (sums.total <= 0.0 || sums.window < kSurvivalFloor) {
      throw NumericError("zeno: state lost (window density underflow)");
    }
    const double survival = sums.window / sums.total;
    truncate_outside(result.final_field, first, last);
    if (schedule.mode == ProjectionMode::Normalized) {
      // Dividing by sqrt(survival) restores the pre-measurement total
      // density: the exterior loss becomes the recorded probability while
      // the amplitude scale of the governing equation is preserved.
      const double scale = 1.0 / std::sqrt(survival);
      for (std::size_t i = first; i <= last; ++i)
        result.final_field.values[i] *= scale;
    }
    cumulative *= survival;

    MeasurementRecord record;
    record.index = n;
    record.time = t_target;
    record.survival = survival;
    record.cumulative = cumulative;
    record.background_level = background_level(result.final_field, first, last);
    auto profile = normalized_profile(result.final_field);
    record.profile_delta = max_abs_difference(profile, previous_profile);
    previous_profile = std::move(profile);
    result.records.push_back(record);

    if (keep_snapshot(n)) result.snapshots.push_back(result.final_field);
  }
  return result;
}

double analytic_survival(double t, std::size_t num_measurements) {
  if (t < 0.0) throw ConfigError("analytic_survival: t must be nonnegative");
  if (num_measurements < 1) {
    throw ConfigError("analytic_survival: need at least one measurement");
  }
  const double four_over_pi = 4.0 / std::numbers::pi;
  const double phase =
      2.0 * std::numbers::pi * t / static_cast<double>(num_measurements);
  const double value =
      1.0 - 0.12 * four_over_pi * four_over_pi * std::pow(phase, 1.5);
  if (value <= 0.0) {
    throw NumericError(
        "analytic_survival: outside validity range (result <= 0)");
  }
  return value;
}

double analytic_cumulative(double t, std::size_t num_measurements) {
  return std::pow(analytic_survival(t, num_measurements),
                  static_cast<double>(num_measurements));
}

}  // namespace zenolse
