#pragma once
#include <string>

#include "ws/types.hpp"

namespace ws {

/// On-disk recording format: one line per sample,
/// "user lap t ax ay az lat lon surface", decimal text. Files are named
/// <user>_<lap>.rec.
void save_recording(const RunRecording& rec, const std::string& path);
RunRecording load_recording(const std::string& path);

std::string recording_filename(int user, int lap);

}  // namespace ws
