#pragma once
#include <cstdint>
#include <vector>

namespace ws {

struct ClassificationScore {
    double macro_f1 = 0;
    double accuracy = 0;
};

/// K x K confusion counts, rows = true class, columns = predicted.
std::vector<int64_t> confusion_matrix(const std::vector<int>& predictions,
                                      const std::vector<int>& labels, int num_classes);

/// Macro F1 (0/0 -> 0 convention, averaged over the full K-class universe)
/// and accuracy, computed by direct per-class counting.
ClassificationScore macro_f1_accuracy(const std::vector<int>& predictions,
                                      const std::vector<int>& labels, int num_classes);

/// The same score computed from a confusion matrix; independent counting
/// route used as the oracle for macro_f1_accuracy.
ClassificationScore score_from_confusion(const std::vector<int64_t>& confusion,
                                         int num_classes);

/// Adjusted Rand index between two labelings of the same points.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ws
