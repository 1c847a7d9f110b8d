#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace zenolse {

/// Uniform periodic spatial lattice on [x_min, x_max) together with its
/// Fourier-space dual.
///
/// Sample i sits at x_min + i*dx with dx = (x_max - x_min)/M. The wavenumber
/// array follows the FFT layout: wavenumbers[m] = 2*pi*m~/(x_max - x_min)
/// where m~ is the signed FFT index in [-M/2, M/2), so that index-wise
/// multiplication in Fourier space implements spectral differentiation.
///
/// Immutable after construction; safe to share across threads.
class Grid {
 public:
  std::size_t num_points() const { return num_points_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return dx_; }
  double length() const { return x_max_ - x_min_; }
  double x(std::size_t i) const { return x_min_ + dx_ * static_cast<double>(i); }
  std::span<const double> wavenumbers() const { return wavenumbers_; }

  bool same_layout(const Grid& other) const {
    return num_points_ == other.num_points_ && x_min_ == other.x_min_ &&
           x_max_ == other.x_max_;
  }

 private:
  friend std::shared_ptr<const Grid> make_grid(std::size_t, double, double);
  Grid(std::size_t num_points, double x_min, double x_max);

  std::size_t num_points_;
  double x_min_;
  double x_max_;
  double dx_;
  std::vector<double> wavenumbers_;
};

/// Builds a grid with M points on [x_min, x_max).
/// Throws ConfigError unless M is a power of two >= 16 and x_max > x_min.
std::shared_ptr<const Grid> make_grid(std::size_t num_points, double x_min,
                                      double x_max);

/// Complex amplitude sampled on a Grid at one time instant. Value type;
/// operations never mutate their inputs unless documented as in-place.
struct ComplexField {
  std::shared_ptr<const Grid> grid;
  std::vector<std::complex<double>> values;
  double time = 0.0;
};

/// Throws NumericError if any value is NaN or infinite.
void require_finite(const ComplexField& field, const char* context);

/// Observation interval [left, right], both inside the grid domain.
struct Window {
  double left;
  double right;
};

/// Index range [first, last] of grid points x_i with left <= x_i <= right
/// (window edges snap outward to the lattice; no fractional edge weights).
/// Throws ConfigError if the window is invalid for the grid or contains
/// fewer than 2 interior points.
std::pair<std::size_t, std::size_t> window_index_range(const Grid& grid,
                                                       const Window& window);

/// Rectangle-rule density integral dx * sum |psi_i|^2 over window points.
double integrate_density(const ComplexField& field, const Window& window);

/// Full-domain density integral dx * sum |psi_i|^2 (exact sum).
double integrate_density(const ComplexField& field);

}  // namespace zenolse
