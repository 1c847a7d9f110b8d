#include "zenolse/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <mutex>

namespace zenolse {

namespace {
// The FFTW planner is not thread-safe; executions are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Fft::Impl {
  std::size_t n = 0;
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  fftw_plan plan_fwd = nullptr;
  fftw_plan plan_bwd = nullptr;

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_fwd) fftw_destroy_plan(plan_fwd);
    if (plan_bwd) fftw_destroy_plan(plan_bwd);
    if (buf_in) fftw_free(buf_in);
    if (buf_out) fftw_free(buf_out);
  }
};

Fft::Fft(std::size_t size) : impl_(std::make_unique<Impl>()) {
  impl_->n = size;
  impl_->buf_in = fftw_alloc_complex(size);
  impl_->buf_out = fftw_alloc_complex(size);
  std::lock_guard<std::mutex> lock(planner_mutex());
  const int n = static_cast<int>(size);
  impl_->plan_fwd = fftw_plan_dft_1d(n, impl_->buf_in, impl_->buf_out,
                                     FFTW_FORWARD, FFTW_ESTIMATE);
  impl_->plan_bwd = fftw_plan_dft_1d(n, impl_->buf_in, impl_->buf_out,
                                     FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() = default;
Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

std::size_t Fft::size() const { return impl_->n; }

void Fft::forward(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
  assert(in.size() == impl_->n && out.size() == impl_->n);
  auto* dst = reinterpret_cast<std::complex<double>*>(impl_->buf_in);
  std::copy(in.begin(), in.end(), dst);
  fftw_execute(impl_->plan_fwd);
  auto* src = reinterpret_cast<std::complex<double>*>(impl_->buf_out);
  std::copy(src, src + impl_->n, out.begin());
}

void Fft::inverse(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
  assert(in.size() == impl_->n && out.size() == impl_->n);
  auto* dst = reinterpret_cast<std::complex<double>*>(impl_->buf_in);
  std::copy(in.begin(), in.end(), dst);
  fftw_execute(impl_->plan_bwd);
  auto* src = reinterpret_cast<std::complex<double>*>(impl_->buf_out);
  const double scale = 1.0 / static_cast<double>(impl_->n);
  for (std::size_t i = 0; i < impl_->n; ++i) out[i] = src[i] * scale;
}

}  // namespace zenolse
