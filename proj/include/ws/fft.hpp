#pragma once
#include <complex>
#include <span>
#include <vector>

namespace ws {

/// In-place iterative radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a);

/// Magnitude spectrum of a real signal zero-padded to `nfft` (power of two).
/// Returns nfft/2 + 1 magnitudes (bins 0..nfft/2).
std::vector<double> fft_magnitudes(std::span<const float> signal, int nfft = 512);
std::vector<double> fft_magnitudes(std::span<const double> signal, int nfft = 512);

}  // namespace ws
