#pragma once
#include <optional>
#include <string>

#include "ws/models.hpp"
#include "ws/roadsim.hpp"
#include "ws/types.hpp"

namespace ws {

struct WindowParams {
    int classifier_len = 450;
    double classifier_overlap = 0.9;
    int vae_len = 400;
    double vae_overlap = 0.5;
};

struct GridParams {
    double cell_m = 5.0;
    double fallback_m = 10.0;
};

struct EvalParams {
    double valid_fraction = 0.1;
    int smoothing_len = 7;
    std::vector<int> knn_grid{1, 3, 5, 7, 9};
    int knn_cv_cap = 4000;  // CV subsample cap for choosing k
    std::vector<double> logreg_c_grid{0.01, 0.1, 1.0, 10.0, 100.0};
    int logreg_max_steps = 5000;
    int logreg_cv_steps = 5000;
    double logreg_lr = 0.05;
    std::vector<double> subsets{1.0, 0.6, 0.2, 0.1, 0.05, 0.02};
    int kmeans_k = 16;
    int kmeans_restarts = 10;
    int fft_bands = 16;
};

struct MapParams {
    double bin_m = 5.0;
    double max_offroute_m = 25.0;
};

struct PipelineConfig {
    uint64_t seed = 0;
    std::string out_dir = "out";
    std::string route_file;  // empty = built-in default route
    int users = 9;
    int filter_len = 5;
    WindowParams window;
    GridParams grid;
    SurfaceCnnConfig cnn;
    ConvVaeConfig vae;
    TrainConfig train_cnn, train_posnet, train_vae, train_mlp;
    EvalParams eval;
    MapParams map;

    uint64_t config_hash() const;
};

/// Parse and validate a config file: defaults filled, unknown keys rejected,
/// missing required fields named. `seed` is required.
PipelineConfig parse_config(const std::string& path);
PipelineConfig config_from_json_text(const std::string& text, const std::string& base_dir);
std::string config_to_json(const PipelineConfig& cfg);

// ---- dataset container on disk -------------------------------------------------

void save_dataset(const Dataset& d, const std::string& path);
Dataset load_dataset(const std::string& path);

std::vector<int> surface_labels(const Dataset& d);

// ---- stages ---------------------------------------------------------------------

struct StageContext {
    PipelineConfig cfg;
    int jobs = 1;
    ThreadPool* pool = nullptr;  // owned by the caller
};

void stage_simulate(StageContext& ctx);
void stage_preprocess(StageContext& ctx);
void stage_train_cnn(StageContext& ctx);
void stage_evaluate(StageContext& ctx);
void stage_train_posnet(StageContext& ctx);
void stage_cluster(StageContext& ctx);
void stage_semi_supervised(StageContext& ctx);
void stage_train_vae(StageContext& ctx);
void stage_map(StageContext& ctx);
void run_all(StageContext& ctx);

/// Dispatch by command name; throws UsageError for unknown commands.
void dispatch(const std::string& command, StageContext& ctx);

/// The route the pipeline runs on (config file or the built-in default).
RouteGeometry pipeline_route(const PipelineConfig& cfg);

}  // namespace ws
