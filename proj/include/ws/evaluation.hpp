#pragma once
#include <string>

#include "ws/rng.hpp"
#include "ws/types.hpp"

namespace ws {

/// One leave-one-subject-out fold: window indices into the dataset.
struct Fold {
    int test_user = -1;
    std::vector<int> train_idx, valid_idx, test_idx;
};

struct FoldPlan {
    std::vector<Fold> folds;
    std::vector<std::string> warnings;  // e.g. a class missing from a train split
};

/// One fold per user; the held-out user never appears in its own train or
/// validation split. Train windows are split 90/10 per class (stratified)
/// with seeded shuffling.
FoldPlan loso_folds(const std::vector<Window>& meta, const std::vector<int>& labels,
                    int num_classes, double valid_fraction, uint64_t seed);

/// Centered moving-average smoothing of a probability sequence (one
/// recording), truncated at the ends; returns argmax labels.
std::vector<int> smooth_probability_run(const double* probs, int n, int num_classes,
                                        int filter_len = 7);

/// Contiguous (user, lap) runs of a window index list, each sorted by start.
/// Reorders `idx` so that runs are contiguous and time-ordered.
std::vector<std::pair<int, int>> recording_runs(std::vector<int>& idx,
                                                const std::vector<Window>& meta);

/// Smoothing applied per recording run; probs is n x K aligned with idx.
std::vector<int> smooth_labels(const std::vector<double>& probs, int num_classes,
                               const std::vector<std::pair<int, int>>& runs,
                               int filter_len = 7);

std::vector<int> argmax_labels(const std::vector<double>& probs, int num_classes);

/// Stratified subset of `idx`: per class max(1, round(fraction * n_c))
/// windows, seeded. Throws DataError if a class present in `idx` cannot be
/// represented after 10 attempts.
std::vector<int> stratified_subset(const std::vector<int>& idx,
                                   const std::vector<int>& labels, double fraction,
                                   int num_classes, uint64_t seed);

}  // namespace ws
