#pragma once

#include <cstddef>
#include <vector>

#include "zenolse/grid.hpp"
#include "zenolse/solver.hpp"

namespace zenolse {

enum class ProjectionMode {
  Normalized,  ///< renormalize after each measurement (survival fraction restored)
  Raw          ///< truncate only; amplitudes keep decaying, as in unnormalized profiles
};

/// Observation schedule: N projective measurements at
/// t_start + n*(t_end - t_start)/N, n = 1..N, onto a fixed window.
struct ZenoSchedule {
  Window window;
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t num_measurements = 1;
  ProjectionMode mode = ProjectionMode::Normalized;
};

/// One measurement: survival fraction, running cumulative product, and two
/// per-measurement diagnostics of the post-measurement state.
struct MeasurementRecord {
  std::size_t index = 0;    ///< n in 1..N
  double time = 0.0;        ///< measurement instant
  double survival = 0.0;    ///< window density / total density, in (0, 1]
  double cumulative = 0.0;  ///< product of survivals up to and including n
  /// Median of |psi| over the middle half of the window (background level).
  double background_level = 0.0;
  /// Max-norm change of the density-normalized |psi| profile since the
  /// previous post-projection state.
  double profile_delta = 0.0;
};

struct ProjectionResult {
  ComplexField field;
  double survival;  ///< window density / total density of the input field
};

/// Projects the field onto the window: zero outside, values copied inside.
/// survival is always the dimensionless in-window fraction of total density.
/// In Normalized mode the output is divided by sqrt(raw window integral) so
/// its density integral equals one.
/// Throws NumericError if the field carries no density ("state lost").
ProjectionResult project(const ComplexField& field, const Window& window,
                         ProjectionMode mode);

struct ZenoResult {
  ComplexField final_field;
  std::vector<MeasurementRecord> records;
  /// Post-projection states: the truncated state at t_start, then states at
  /// measurement instants selected by params.record_every (stride counted in
  /// solver steps since t_start). Empty when record_every == 0.
  std::vector<ComplexField> snapshots;
};

/// Runs the measurement cycle
///   truncate at t_start, then N times { evolve over (t_end-t_start)/N,
///   measure, truncate, renormalize if Normalized }.
///
/// The cycle starts from the truncated state at t_start (the preparation);
/// that projection opens the run and is not a numbered measurement. Each
/// numbered measurement reports survival = window/total of the pre-measurement
/// field. Normalized mode divides the truncated state by sqrt(survival),
/// which restores the pre-measurement total density: amplitudes stay at the
/// physical scale set by the governing equation while the exterior loss is
/// converted into the recorded probability. Raw mode leaves amplitudes
/// untouched.
///
/// Requires initial.time == t_start and an inter-measurement interval
/// commensurate with params.dt.
ZenoResult run_zeno(const ComplexField& initial, const ZenoSchedule& schedule,
                    const SsfmParams& params, SsfmSolver& solver);

/// Closed-form single-measurement survival estimate
///   1 - 0.12 (4/pi)^2 (2 pi t / N)^(3/2)
/// for N equally spaced measurements over [0, t]. Throws NumericError outside
/// its validity range (result <= 0).
double analytic_survival(double t, std::size_t num_measurements);

/// analytic_survival(t, N)^N.
double analytic_cumulative(double t, std::size_t num_measurements);

}  // namespace zenolse
