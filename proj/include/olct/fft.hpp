#ifndef OLCT_FFT_HPP
#define OLCT_FFT_HPP

#include <complex>
#include <vector>

namespace olct {

// In-place complex FFT, any length, unnormalized.
// forward: X[j] = sum_k x[k] e^{-2*pi*i*j*k/N}; inverse: conjugate twiddles, no 1/N.
// Thread-safe; plans are cached per length.
void fft_forward(std::vector<std::complex<double>>& data);
void fft_inverse(std::vector<std::complex<double>>& data);

std::size_t next_pow2(std::size_t n);

} // namespace olct

#endif
