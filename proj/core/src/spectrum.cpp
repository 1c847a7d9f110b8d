#include "zenolse/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "zenolse/errors.hpp"
#include "zenolse/fft.hpp"

namespace zenolse {

namespace {

constexpr double kDbFloor = -240.0;
constexpr double kDbClampRatio = 1e-12;

SpectrumFrame frame_from_spectrum(const ComplexField& field, Fft& fft,
                                  std::vector<std::complex<double>>& scratch) {
  const std::size_t m = field.grid->num_points();
  fft.forward(field.values, scratch);

  SpectrumFrame frame;
  frame.time = field.time;
  frame.wavenumbers.resize(m);
  frame.magnitude.resize(m);
  frame.magnitude_db.resize(m);

  // Reorder so k runs monotonically: centered index j holds FFT index
  // (j + M/2) mod M, i.e. k = dk * (j - M/2).
  const auto k = field.grid->wavenumbers();
  const std::size_t half = m / 2;
  double max_magnitude = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t src = (j + half) % m;
    frame.wavenumbers[j] = k[src];
    const double magnitude = std::abs(scratch[src]);
    frame.magnitude[j] = magnitude;
    max_magnitude = std::max(max_magnitude, magnitude);
  }
  if (max_magnitude <= 0.0) {
    throw NumericError("power_spectrum: all-zero field has no dB reference");
  }
  const double clamp = max_magnitude * kDbClampRatio;
  for (std::size_t j = 0; j < m; ++j) {
    frame.magnitude_db[j] =
        frame.magnitude[j] < clamp
            ? kDbFloor
            : 20.0 * std::log10(frame.magnitude[j] / max_magnitude);
  }
  return frame;
}

}  // namespace

SpectrumFrame power_spectrum(const ComplexField& field) {
  require_finite(field, "power_spectrum");
  Fft fft(field.grid->num_points());
  std::vector<std::complex<double>> scratch(field.grid->num_points());
  return frame_from_spectrum(field, fft, scratch);
}

std::vector<SpectrumFrame> spectrogram(
    std::span<const ComplexField> snapshots) {
  if (snapshots.empty()) {
    throw ConfigError("spectrogram: no snapshots");
  }
  const Grid& grid = *snapshots.front().grid;
  for (const auto& snap : snapshots) {
    if (!snap.grid->same_layout(grid)) {
      throw ConfigError("spectrogram: snapshots use mixed grids");
    }
  }
  Fft fft(grid.num_points());
  std::vector<std::complex<double>> scratch(grid.num_points());
  std::vector<SpectrumFrame> frames;
  frames.reserve(snapshots.size());
  for (const auto& snap : snapshots) {
    require_finite(snap, "spectrogram");
    frames.push_back(frame_from_spectrum(snap, fft, scratch));
  }
  return frames;
}

std::size_t bins_above(const SpectrumFrame& frame, double threshold_db) {
  return static_cast<std::size_t>(
      std::count_if(frame.magnitude_db.begin(), frame.magnitude_db.end(),
                    [threshold_db](double db) { return db > threshold_db; }));
}

}  // namespace zenolse
