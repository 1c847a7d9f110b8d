#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace zenolse {

/// Complex-to-complex FFT of a fixed size, backed by FFTW.
///
/// Convention: forward() is unnormalized, inverse() scales by 1/n, so
/// inverse(forward(x)) == x and Parseval reads
///   sum |x_i|^2 == (1/n) * sum |X_k|^2.
///
/// Plans are created with FFTW_ESTIMATE, which keeps plan selection (and
/// therefore floating-point results) deterministic across runs. One Fft
/// instance must not be used from two threads at once; independent instances
/// are fine.
class Fft {
 public:
  explicit Fft(std::size_t size);
  ~Fft();

  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const;

  void forward(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out);
  void inverse(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace zenolse
