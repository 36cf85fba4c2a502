#pragma once
#include "ws/features.hpp"
#include "ws/rng.hpp"
#include "ws/threadpool.hpp"

namespace ws {

// ---- k-nearest neighbors ----------------------------------------------------

/// Euclidean k-NN over a borrowed feature matrix. Distance ties break toward
/// the lower reference index, vote ties toward the smallest class index.
struct KnnModel {
    const FeatureMatrix* train = nullptr;
    const std::vector<int>* labels = nullptr;
    int k = 1;
    int num_classes = 0;

    std::vector<int> predict(const FeatureMatrix& queries, ThreadPool* pool) const;
    /// Vote shares (n x num_classes), usable by the smoothing filter.
    std::vector<double> predict_proba(const FeatureMatrix& queries, ThreadPool* pool) const;
};

/// Pick k from `grid` by stratified 5-fold cross-validation on the training
/// set, maximizing macro F1.
int knn_select_k(const FeatureMatrix& train, const std::vector<int>& labels,
                 int num_classes, const std::vector<int>& grid, uint64_t seed,
                 ThreadPool* pool);

// ---- multinomial logistic regression ------------------------------------------

/// Full-batch Adam on mean cross-entropy + ||W||^2 / (2C). Features are
/// standardized internally with statistics fit at training time.
struct LogRegModel {
    int num_classes = 0, dim = 0;
    double c_reg = 1.0;
    std::vector<double> w;  // K x F
    std::vector<double> b;  // K
    Standardizer scaler;

    std::vector<int> predict(const FeatureMatrix& x, ThreadPool* pool) const;
    std::vector<double> predict_proba(const FeatureMatrix& x, ThreadPool* pool) const;
};

struct LogRegOptions {
    double c_reg = 1.0;
    int max_steps = 5000;
    double grad_tol = 1e-5;
    double lr = 0.05;
    uint64_t seed = 0;
};

LogRegModel logreg_fit(const FeatureMatrix& x, const std::vector<int>& labels,
                       int num_classes, const LogRegOptions& opts, ThreadPool* pool);

/// Pick C from the grid by 5-fold CV accuracy.
double logreg_select_c(const FeatureMatrix& x, const std::vector<int>& labels,
                       int num_classes, const std::vector<double>& c_grid,
                       LogRegOptions opts, uint64_t seed, ThreadPool* pool);

// ---- k-means -------------------------------------------------------------------

struct KMeansResult {
    int k = 0, dim = 0;
    std::vector<int> assignment;
    std::vector<double> centers;  // k x dim
    double inertia = 0;
    std::vector<double> inertia_history;  // per Lloyd iteration of the best restart
};

/// k-means++ seeding, Lloyd iterations to a 1e-6 center shift or 100
/// iterations, best of `restarts` by inertia. Empty clusters are re-seeded
/// to the point farthest from its center.
KMeansResult kmeans(const FeatureMatrix& x, int k, uint64_t seed, int restarts = 10,
                    ThreadPool* pool = nullptr);

}  // namespace ws
