#pragma once

#include <complex>
#include <vector>

namespace gpe {

/// One-dimensional complex FFT of a fixed size, forward/inverse pair.
/// The inverse is normalized (inverse(forward(x)) == x up to rounding).
/// Plans are created with FFTW_ESTIMATE so that repeated runs pick the same
/// algorithm and produce bit-identical results. Construction/destruction are
/// internally serialized; a given instance must not be used concurrently
/// (it owns scratch buffers), so create one per thread.
class Fft {
public:
    explicit Fft(int n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    int size() const { return n_; }

    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

    void forward(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) const;
    void inverse(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out) const;

private:
    int n_;
    void* plan_fwd_;
    void* plan_inv_;
    std::complex<double>* buf_in_;
    std::complex<double>* buf_out_;
};

}  // namespace gpe
