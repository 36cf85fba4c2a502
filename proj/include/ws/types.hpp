#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ws {

/// Usage error (bad flags, unknown command). CLI exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Data error (bad input file, missing artifact, invalid config). Exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Numeric failure (divergence, non-finite values). Exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SurfaceLabel : uint8_t { Slope = 0, Curb = 1, TI = 2, Oths = 3 };
inline constexpr int kNumSurfaceClasses = 4;

const char* surface_label_name(SurfaceLabel s);
SurfaceLabel surface_label_from_name(const std::string& name);

struct AccelSample {
    double t = 0;                  // seconds since recording start
    double ax = 0, ay = 0, az = 0; // m/s^2: forward, lateral, vertical
    double lat = 0, lon = 0;       // WGS84 degrees
    SurfaceLabel surface = SurfaceLabel::Oths;
};

/// One user-lap stream at a nominal 50 Hz.
struct RunRecording {
    int user = 0;
    int lap = 0;  // 1..3
    std::vector<AccelSample> samples;
};

inline constexpr double kSampleRateHz = 50.0;

/// Per-axis population mean/stddev of one recording.
struct NormStats {
    std::array<double, 3> mean{0, 0, 0};
    std::array<double, 3> stddev{1, 1, 1};
};

/// Window metadata; sample values live in the producing container.
struct Window {
    int user = 0;
    int lap = 0;
    int start = 0;  // index of first sample in the recording
    double center_lat = 0, center_lon = 0;
    SurfaceLabel surface = SurfaceLabel::Oths;
    int grid_id = -1;  // set by weak supervision, -1 = unassigned
};

/// Segmentation result over one recording: window metadata plus the
/// preprocessed per-window sample matrix (row-major, 3 x len per window).
struct WindowSet {
    int window_len = 0;
    std::vector<Window> windows;
    std::vector<double> data;  // windows.size() * 3 * window_len
    bool short_recording = false;  // recording shorter than one window

    size_t count() const { return windows.size(); }
    std::span<const double> samples(size_t i) const {
        size_t stride = static_cast<size_t>(3) * window_len;
        return {data.data() + i * stride, stride};
    }
};

/// Stage-level dataset: many recordings' windows in float32.
struct Dataset {
    int window_len = 0;
    std::vector<Window> meta;
    std::vector<float> x;  // n * 3 * window_len

    int n() const { return static_cast<int>(meta.size()); }
    size_t stride() const { return static_cast<size_t>(3) * window_len; }
    const float* window_ptr(int i) const { return x.data() + i * stride(); }
    float* window_ptr(int i) { return x.data() + i * stride(); }
};

}  // namespace ws
