#pragma once
#include "ws/nn/adam.hpp"
#include "ws/nn/graph.hpp"
#include "ws/nn/vae.hpp"
#include "ws/types.hpp"

namespace ws {

/// Lanes per SOA block; batches are processed in blocks of this many samples.
inline constexpr int kLanes = 16;

struct SurfaceCnnConfig {
    int window_len = 450;
    int kernel = 5;
    std::array<int, 4> feature_maps{32, 64, 64, 128};
    int dense_units = 500;
    int num_classes = 4;
    std::array<float, 5> dropout_rates{0.2f, 0.3f, 0.3f, 0.4f, 0.5f};
};

struct ConvVaeConfig {
    int window_len = 400;
    int kernel = 5;
    std::array<int, 4> feature_maps{32, 64, 64, 128};
    int latent_dim = 64;
    double beta = 1e-3 / 64.0;  // KL weight; 0 reproduces a plain reconstruction loss
};

struct TrainConfig {
    double lr = 1e-4;
    int batch = 64;
    int max_epochs = 100;
    int patience = 5;
    uint64_t seed = 0;
    bool class_weighted = false;
};

struct TrainHistory {
    std::vector<double> train_loss, valid_loss;
    int best_epoch = -1;  // 0-based epoch whose weights were restored
};

/// Borrowed view of a sample matrix: each sample is `ch*len` floats.
/// `idx` selects the subset (and ordering) visible through the view.
struct DataView {
    const float* x = nullptr;
    size_t sample_stride = 0;
    const int* labels = nullptr;  // nullable (VAE)
    int ch = 0, len = 0;
    std::vector<int> idx;

    int n() const { return static_cast<int>(idx.size()); }
    const float* sample(int i) const { return x + sample_stride * idx[i]; }
    int label(int i) const { return labels[idx[i]]; }
};

DataView view_of(const Dataset& d, std::vector<int> idx, const std::vector<int>& labels);

nn::ModelGraph<float> build_surface_cnn(const SurfaceCnnConfig& cfg);
nn::ModelGraph<float> build_posnet(const SurfaceCnnConfig& base, int grid_classes);
/// Two 500-unit fully connected layers and a softmax output.
nn::ModelGraph<float> build_mlp(int in_features, int num_classes, int units = 500);
nn::ConvVae<float> build_convvae(const ConvVaeConfig& cfg);

/// Inverse-frequency class weights: w_k = N / (K * n_k).
std::vector<float> inverse_frequency_weights(const DataView& data, int num_classes);

/// Mini-batch Adam training with early stopping on the validation loss.
/// Restores the best-epoch weights. Deterministic given cfg.seed.
/// Throws NumericError naming the epoch on divergence.
TrainHistory train_classifier(nn::ModelGraph<float>& g, const DataView& train,
                              const DataView& valid, const TrainConfig& cfg,
                              ThreadPool* pool);

TrainHistory train_vae(nn::ConvVae<float>& m, const DataView& train, const DataView& valid,
                       const TrainConfig& cfg, double beta, ThreadPool* pool);

/// Eval-mode class probabilities for every sample in the view (row-major N x K).
std::vector<double> predict_proba_batch(const nn::ModelGraph<float>& g, const DataView& d,
                                        ThreadPool* pool);

/// Eval-mode probabilities for one sample.
std::vector<double> predict_proba(const nn::ModelGraph<float>& g,
                                  std::span<const float> sample);

/// Post-ReLU activations of the fully connected layer (N x units).
std::vector<float> extract_fc_features(const nn::ModelGraph<float>& g, const DataView& d,
                                       ThreadPool* pool);

/// Deterministic reconstruction error (decode from z = mu) per sample.
std::vector<double> vae_reconstruction_errors(const nn::ConvVae<float>& m,
                                              const DataView& d, ThreadPool* pool);

/// Mean eval-mode classification loss (used for reporting).
double mean_weighted_ce(const nn::ModelGraph<float>& g, const DataView& d,
                        const std::vector<float>& class_weights, ThreadPool* pool);

}  // namespace ws
