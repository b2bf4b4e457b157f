#include "gpe/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace gpe {

namespace {
// FFTW planning is not thread-safe; executing plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("Fft size must be positive");
    std::lock_guard<std::mutex> lock(planner_mutex());
    buf_in_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
    buf_out_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (!buf_in_ || !buf_out_) throw std::bad_alloc();
    plan_fwd_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft::forward(const std::complex<double>* in, std::complex<double>* out) const {
    std::memcpy(buf_in_, in, sizeof(std::complex<double>) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    std::memcpy(out, buf_out_, sizeof(std::complex<double>) * n_);
}

void Fft::inverse(const std::complex<double>* in, std::complex<double>* out) const {
    std::memcpy(buf_in_, in, sizeof(std::complex<double>) * n_);
    fftw_execute(static_cast<fftw_plan>(plan_inv_));
    const double scale = 1.0 / n_;
    for (int j = 0; j < n_; ++j) out[j] = buf_out_[j] * scale;
}

void Fft::forward(const std::vector<std::complex<double>>& in,
                  std::vector<std::complex<double>>& out) const {
    out.resize(n_);
    forward(in.data(), out.data());
}

void Fft::inverse(const std::vector<std::complex<double>>& in,
                  std::vector<std::complex<double>>& out) const {
    out.resize(n_);
    inverse(in.data(), out.data());
}

}  // namespace gpe
