#include "zenolse/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "zenolse/errors.hpp"

namespace zenolse {

namespace {
bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(std::size_t num_points, double x_min, double x_max)
    : num_points_(num_points),
      x_min_(x_min),
      x_max_(x_max),
      dx_((x_max - x_min) / static_cast<double>(num_points)),
      wavenumbers_(num_points) {
  const double dk = 2.0 * std::numbers::pi / (x_max - x_min);
  const auto m = static_cast<std::ptrdiff_t>(num_points);
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const std::ptrdiff_t signed_index = i < m / 2 ? i : i - m;
    wavenumbers_[static_cast<std::size_t>(i)] =
        dk * static_cast<double>(signed_index);
  }
}

std::shared_ptr<const Grid> make_grid(std::size_t num_points, double x_min,
                                      double x_max) {
  if (num_points < 16 || !is_power_of_two(num_points)) {
    std::ostringstream msg;
    msg << "grid: num_points must be a power of two >= 16, got " << num_points;
    throw ConfigError(msg.str());
  }
  if (!(x_max > x_min)) {
    std::ostringstream msg;
    msg << "grid: x_max (" << x_max << ") must exceed x_min (" << x_min << ")";
    throw ConfigError(msg.str());
  }
  return std::shared_ptr<const Grid>(new Grid(num_points, x_min, x_max));
}

void require_finite(const ComplexField& field, const char* context) {
  for (const auto& v : field.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericError(std::string(context) +
                         ": field contains non-finite values");
    }
  }
}

std::pair<std::size_t, std::size_t> window_index_range(const Grid& grid,
                                                       const Window& window) {
  if (!(window.left < window.right)) {
    throw ConfigError("window: left must be less than right");
  }
  if (window.left < grid.x_min() || window.right >= grid.x_max()) {
    std::ostringstream msg;
    msg << "window [" << window.left << ", " << window.right
        << "] is outside the grid domain [" << grid.x_min() << ", "
        << grid.x_max() << ")";
    throw ConfigError(msg.str());
  }
  // First index with x_i >= left, last with x_i <= right.
  const double inv_dx = 1.0 / grid.dx();
  auto first = static_cast<std::ptrdiff_t>(
      std::ceil((window.left - grid.x_min()) * inv_dx - 1e-12));
  auto last = static_cast<std::ptrdiff_t>(
      std::floor((window.right - grid.x_min()) * inv_dx + 1e-12));
  first = std::max<std::ptrdiff_t>(first, 0);
  last = std::min<std::ptrdiff_t>(last,
                                  static_cast<std::ptrdiff_t>(grid.num_points()) - 1);

  // At least 2 grid points strictly inside (left, right).
  std::size_t strict = 0;
  for (std::ptrdiff_t i = first; i <= last && strict < 2; ++i) {
    const double xi = grid.x(static_cast<std::size_t>(i));
    if (xi > window.left && xi < window.right) ++strict;
  }
  if (last < first || strict < 2) {
    throw ConfigError("window: fewer than 2 grid points strictly inside");
  }
  return {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
}

double integrate_density(const ComplexField& field, const Window& window) {
  const auto [first, last] = window_index_range(*field.grid, window);
  double sum = 0.0;
  for (std::size_t i = first; i <= last; ++i) {
    sum += std::norm(field.values[i]);
  }
  return sum * field.grid->dx();
}

double integrate_density(const ComplexField& field) {
  double sum = 0.0;
  for (const auto& v : field.values) sum += std::norm(v);
  return sum * field.grid->dx();
}

}  // namespace zenolse
