#pragma once
#include "ws/types.hpp"

namespace ws {

/// Centered moving-average filter. Ends use truncated (shorter) centered
/// windows, so output length equals input length and no samples are invented.
std::vector<double> mean_filter(std::span<const double> signal, int length = 5);

/// Z-score each axis over the whole recording (population stddev).
/// Throws DataError on an axis with stddev <= 1e-9.
NormStats zscore_normalize(RunRecording& recording);

/// Undo zscore_normalize with the stats it returned.
void denormalize(RunRecording& recording, const NormStats& stats);

/// In-place mean filter of each axis of a recording.
void mean_filter_recording(RunRecording& recording, int length = 5);

/// Slice a recording into fixed-length windows with the given overlap.
/// stride = round(window * (1 - overlap)); trailing samples are dropped.
/// A recording shorter than one window yields an empty set with
/// short_recording set.
WindowSet segment_windows(const RunRecording& recording, int window_len,
                          double overlap_fraction);

/// Position of the sample at start + floor(len/2).
void window_center_position(const RunRecording& recording, int start, int len,
                            double& lat, double& lon);

/// Majority (plurality) vote over per-sample labels. Ties go to the class
/// that is rarest in `global_counts` (so barrier classes win over Oths).
SurfaceLabel window_majority_label(const RunRecording& recording, int start, int len,
                                   const std::array<int64_t, 4>& global_counts);

/// Per-class sample counts over one recording.
std::array<int64_t, 4> label_counts(const RunRecording& recording);

}  // namespace ws
