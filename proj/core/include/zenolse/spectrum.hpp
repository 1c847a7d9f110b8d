#pragma once

#include <span>
#include <vector>

#include "zenolse/grid.hpp"

namespace zenolse {

/// One Fourier spectrum with the zero mode centered.
///
/// wavenumbers runs monotonically from -k_max to k_max - dk. magnitude holds
/// |psi_hat_k| of the unnormalized forward transform; magnitude_db is
/// 20*log10(|psi_hat_k| / max), clamped to -240 dB below max * 1e-12, with
/// maximum exactly 0.
struct SpectrumFrame {
  double time = 0.0;
  std::vector<double> wavenumbers;
  std::vector<double> magnitude;
  std::vector<double> magnitude_db;
};

/// Throws NumericError for an identically zero field (dB reference undefined).
SpectrumFrame power_spectrum(const ComplexField& field);

/// power_spectrum per snapshot; all snapshots must share one grid.
std::vector<SpectrumFrame> spectrogram(std::span<const ComplexField> snapshots);

/// Number of bins with magnitude_db above the threshold (spectral width proxy).
std::size_t bins_above(const SpectrumFrame& frame, double threshold_db);

}  // namespace zenolse
