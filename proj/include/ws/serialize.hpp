#pragma once
#include <optional>
#include <string>

#include "ws/models.hpp"
#include "ws/nn/vae.hpp"

namespace ws {

enum class ModelType : uint32_t { SurfaceCnn = 0, PosNet = 1, Mlp = 2, Vae = 3 };

/// Provenance stored with every weights file so an experiment is
/// self-describing: the generating config, its hash, the training seed and
/// the per-recording normalization statistics.
struct ModelProvenance {
    uint64_t config_hash = 0;
    uint64_t seed = 0;
    std::string config_json;
    std::vector<std::tuple<int, int, NormStats>> norm_stats;  // (user, lap, stats)
};

struct LoadedModel {
    ModelType type = ModelType::SurfaceCnn;
    nn::ModelGraph<float> graph;  // classifier kinds
    nn::ConvVae<float> vae;       // ModelType::Vae
    ModelProvenance provenance;
};

/// Versioned binary container: header, per-layer descriptors and
/// little-endian float32 parameter arrays, then the provenance block.
void save_model(const std::string& path, ModelType type, const nn::ModelGraph<float>& g,
                const ModelProvenance& prov);
void save_vae_model(const std::string& path, const nn::ConvVae<float>& m,
                    const ModelProvenance& prov);
LoadedModel load_model(const std::string& path);

}  // namespace ws
