#pragma once
#include <span>
#include <vector>

#include "ws/threadpool.hpp"
#include "ws/types.hpp"

namespace ws {

inline constexpr int kHeuristicFeatureCount = 36;  // 12 per axis

/// Hand-crafted features, 12 per axis: mean, std, max, min, zero-crossing
/// count, mean/std/max/min of the first difference, dominant FFT frequency
/// (Hz at 50 Hz sampling, 512-point FFT, DC excluded), FFT energy and FFT
/// spectral entropy. An all-zero spectrum yields frequency 0 and entropy 0.
std::vector<double> heuristic_features(std::span<const float> window, int len);

/// Per-axis mean and standard deviation (6 values).
std::vector<double> mv_features(std::span<const float> window, int len);

/// Log-energy of `bands` contiguous FFT bands per axis (DC excluded);
/// compact spectral signature used by the grid-position baseline.
std::vector<double> fft_band_features(std::span<const float> window, int len, int bands = 16);

/// Feature matrices for a whole dataset (row-major, n x dim).
struct FeatureMatrix {
    int dim = 0;
    std::vector<float> x;
    int n() const { return dim == 0 ? 0 : static_cast<int>(x.size()) / dim; }
    const float* row(int i) const { return x.data() + static_cast<size_t>(i) * dim; }
};

enum class FeatureKind { Heuristic, MeanStd, FftBands, Raw };

FeatureMatrix compute_features(const Dataset& data, FeatureKind kind, ThreadPool* pool);

/// Column-wise standardization fit on one matrix and applied to others.
struct Standardizer {
    std::vector<double> mean, stddev;
    void fit(const FeatureMatrix& m);
    void apply(FeatureMatrix& m) const;
};

}  // namespace ws
