#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "zenolse/fft.hpp"
#include "zenolse/grid.hpp"

namespace zenolse {

enum class Splitting {
  Lie,    ///< nonlinear step then linear step, first order
  Strang  ///< half linear, nonlinear, half linear, second order
};

struct SsfmParams {
  double dt = 1e-3;
  Splitting splitting = Splitting::Lie;
  /// Snapshot stride in steps; 0 records nothing.
  std::size_t record_every = 0;
};

/// Split-step Fourier integrator for the focusing cubic Schroedinger equation
/// on a periodic grid.
///
/// Both substeps are pointwise-unimodular multipliers (in x and in k), so the
/// density integral is conserved to machine precision and each substep is
/// exactly invertible by negating dt.
///
/// One instance owns reusable FFT workspace and must not be shared between
/// threads; independent instances may run concurrently.
class SsfmSolver {
 public:
  explicit SsfmSolver(std::shared_ptr<const Grid> grid);

  const Grid& grid() const { return *grid_; }

  /// values[i] *= exp(i |values[i]|^2 dt); magnitudes are preserved pointwise.
  static ComplexField nonlinear_substep(const ComplexField& field, double dt);

  /// Multiplies each Fourier mode by exp(-i k^2 dt / 2).
  ComplexField linear_substep(const ComplexField& field, double dt);

  /// One full step of params.dt; advances the time stamp. Lie uses exactly
  /// two FFTs.
  ComplexField ssfm_step(const ComplexField& field, const SsfmParams& params);

  struct EvolveResult {
    ComplexField final_field;
    std::vector<ComplexField> snapshots;
  };

  /// Steps from field.time to t_end. The interval must be an integer number
  /// of steps: steps = round((t_end - t0)/dt), rejected (ConfigError) if
  /// |(t_end - t0)/dt - steps| > 5e-7. No partial steps are taken. Snapshots
  /// are recorded at step indices divisible by record_every (including the
  /// initial state) when record_every > 0.
  EvolveResult evolve(const ComplexField& field, double t_end,
                      const SsfmParams& params);

 private:
  void apply_nonlinear(std::vector<std::complex<double>>& v, double dt) const;
  void apply_linear(std::vector<std::complex<double>>& v, double dt);
  void step_in_place(std::vector<std::complex<double>>& v,
                     const SsfmParams& params);

  std::shared_ptr<const Grid> grid_;
  Fft fft_;
  std::vector<std::complex<double>> freq_;
  std::vector<std::complex<double>> phase_;  // cached exp(-i k^2 dt_cached_ / 2)
  double dt_cached_;
};

/// Number of whole steps covering [t0, t1] at step dt.
/// Throws ConfigError when the interval is not commensurate with dt.
std::size_t commensurate_steps(double t0, double t1, double dt,
                               const std::string& context);

}  // namespace zenolse
