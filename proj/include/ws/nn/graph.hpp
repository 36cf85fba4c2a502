#pragma once
#include <string>

#include "ws/nn/kernels.hpp"

namespace ws::nn {

enum class LayerKind : uint32_t {
    Conv1d = 0,
    TConv1d,
    MaxPool1d,
    Upsample1d,
    Dense,
    Relu,
    Dropout,
    Flatten,
    Reshape,
};

const char* layer_kind_name(LayerKind k);

struct LayerSpec {
    LayerKind kind = LayerKind::Relu;
    int32_t in_ch = 0, out_ch = 0, kernel = 0;
    Padding pad = Padding::Same;
    int32_t stride = 1;     // tconv scatter stride / pool stride
    int32_t pool = 2;
    int32_t factor = 2;
    int32_t in_features = 0, units = 0;
    float rate = 0.f;       // dropout
    int32_t out_len = 0;    // reshape target (channels = out_ch)

    static LayerSpec conv(int in_ch, int out_ch, int kernel, Padding pad = Padding::Same);
    static LayerSpec tconv(int in_ch, int out_ch, int kernel, int stride = 1,
                           Padding pad = Padding::Same);
    static LayerSpec maxpool(int pool = 2, int stride = 2);
    static LayerSpec upsample(int factor = 2);
    static LayerSpec dense(int in_features, int units);
    static LayerSpec relu();
    static LayerSpec dropout(float rate);
    static LayerSpec flatten();
    static LayerSpec reshape(int out_ch, int out_len);

    size_t weight_count() const;
    size_t bias_count() const;
    /// Output (channels, length) for a given input shape; validates chaining.
    void out_shape(int in_c, int in_l, int& out_c, int& out_l) const;
};

enum class Mode { Train, Eval };

/// Sequential network: layer specs plus parameter arrays, shared by the
/// classifier, PosNet, the MLP heads and both halves of the VAE.
template <typename T>
struct ModelGraph {
    int input_ch = 0, input_len = 0;
    std::vector<LayerSpec> layers;
    std::vector<std::vector<T>> weights;
    std::vector<std::vector<T>> biases;
    int feature_layer = -1;  // activation tap: index of the layer whose output is the feature

    void finalize_shapes();  // validates the chain, sizes parameter arrays
    void init_params(Rng& rng, bool zero_last_dense = true);
    size_t param_count() const;
    void output_shape(int& c, int& l) const;

    template <typename U>
    ModelGraph<U> cast() const {
        ModelGraph<U> g;
        g.input_ch = input_ch;
        g.input_len = input_len;
        g.layers = layers;
        g.feature_layer = feature_layer;
        g.weights.resize(weights.size());
        g.biases.resize(biases.size());
        for (size_t i = 0; i < weights.size(); ++i) {
            g.weights[i].assign(weights[i].begin(), weights[i].end());
            g.biases[i].assign(biases[i].begin(), biases[i].end());
        }
        return g;
    }
};

/// Per-block scratch: activations act[0..n] with act[i] the input of layer i,
/// plus dropout masks and pool argmax caches needed by the backward pass.
template <typename T>
struct Workspace {
    std::vector<Tensor3<T>> act;
    std::vector<std::vector<T>> mask;
    std::vector<std::vector<int32_t>> argmax;
    Tensor3<T> ga, gb;  // ping-pong gradient buffers

    void prepare(size_t n_layers) {
        act.resize(n_layers + 1);
        mask.resize(n_layers);
        argmax.resize(n_layers);
    }
};

template <typename T>
struct GradStore {
    std::vector<std::vector<T>> dw, db;

    void match(const ModelGraph<T>& g) {
        dw.resize(g.weights.size());
        db.resize(g.biases.size());
        for (size_t i = 0; i < dw.size(); ++i) {
            dw[i].assign(g.weights[i].size(), T(0));
            db[i].assign(g.biases[i].size(), T(0));
        }
    }
    void zero() {
        for (auto& v : dw) std::fill(v.begin(), v.end(), T(0));
        for (auto& v : db) std::fill(v.begin(), v.end(), T(0));
    }
};

/// Forward over the whole graph. `x` is copied into ws.act[0]. In Train mode
/// `lane_rngs` supplies one stream per lane for dropout. Returns the output.
/// Throws NumericError naming the layer on a non-finite intermediate.
template <typename T>
const Tensor3<T>& graph_forward(const ModelGraph<T>& g, const Tensor3<T>& x, Mode mode,
                                Rng* lane_rngs, Workspace<T>& ws, ThreadPool* pool);

/// Reverse pass; accumulates parameter gradients into `grads`.
/// If `gin` is non-null it receives the gradient wrt the input.
template <typename T>
void graph_backward(const ModelGraph<T>& g, Workspace<T>& ws, const Tensor3<T>& gout,
                    GradStore<T>& grads, Tensor3<T>* gin, ThreadPool* pool);

// ---- implementation ---------------------------------------------------------

template <typename T>
void check_finite(const Tensor3<T>& t, const ModelGraph<T>& g, size_t layer_idx,
                  const char* phase) {
    // NaN/Inf poison the absolute sum, so one pass detects both
    T acc = 0;
    for (const T& v : t.v) acc += v < T(0) ? -v : v;
    if (!(acc < T(1e30)))
        throw NumericError(std::string("non-finite value in ") + phase + " at layer " +
                           std::to_string(layer_idx) + " (" +
                           layer_kind_name(g.layers[layer_idx].kind) + ")");
}

template <typename T>
const Tensor3<T>& graph_forward(const ModelGraph<T>& g, const Tensor3<T>& x, Mode mode,
                                Rng* lane_rngs, Workspace<T>& ws, ThreadPool* pool) {
    if (x.c != g.input_ch || x.l != g.input_len)
        throw std::invalid_argument("graph_forward: input shape mismatch");
    ws.prepare(g.layers.size());
    ws.act[0] = x;
    for (size_t i = 0; i < g.layers.size(); ++i) {
        const LayerSpec& s = g.layers[i];
        const Tensor3<T>& in = ws.act[i];
        Tensor3<T>& out = ws.act[i + 1];
        switch (s.kind) {
            case LayerKind::Conv1d:
                conv1d_forward(in, g.weights[i].data(), g.biases[i].data(), s.out_ch,
                               s.kernel, s.pad, out, pool);
                break;
            case LayerKind::TConv1d:
                tconv1d_forward(in, g.weights[i].data(), g.biases[i].data(), s.out_ch,
                                s.kernel, s.stride, s.pad, out, pool);
                break;
            case LayerKind::MaxPool1d:
                maxpool1d_forward(in, s.pool, s.stride, out, ws.argmax[i], pool);
                break;
            case LayerKind::Upsample1d:
                upsample1d_forward(in, s.factor, out, pool);
                break;
            case LayerKind::Dense:
                dense_forward(in, g.weights[i].data(), g.biases[i].data(), s.units, out,
                              pool);
                break;
            case LayerKind::Relu:
                relu_forward(in, out, pool);
                break;
            case LayerKind::Dropout:
                if (mode == Mode::Train && s.rate > 0) {
                    if (!lane_rngs)
                        throw std::invalid_argument("dropout in train mode needs lane rngs");
                    dropout_forward_train(in, s.rate, lane_rngs, out, ws.mask[i], pool);
                } else {
                    out = in;
                    ws.mask[i].clear();
                }
                break;
            case LayerKind::Flatten:
                out = in;
                out.c = in.c * in.l;
                out.l = 1;
                break;
            case LayerKind::Reshape:
                out = in;
                out.c = s.out_ch;
                out.l = s.out_len;
                break;
        }
        check_finite(out, g, i, "forward");
    }
    return ws.act[g.layers.size()];
}

template <typename T>
void graph_backward(const ModelGraph<T>& g, Workspace<T>& ws, const Tensor3<T>& gout,
                    GradStore<T>& grads, Tensor3<T>* gin, ThreadPool* pool) {
    ws.ga = gout;
    Tensor3<T>* cur = &ws.ga;
    Tensor3<T>* nxt = &ws.gb;
    for (size_t ii = g.layers.size(); ii-- > 0;) {
        const LayerSpec& s = g.layers[ii];
        const Tensor3<T>& in = ws.act[ii];
        const bool need_gin = (ii > 0) || (gin != nullptr);
        switch (s.kind) {
            case LayerKind::Conv1d:
                conv1d_backward(in, g.weights[ii].data(), s.out_ch, s.kernel, s.pad, *cur,
                                need_gin ? nxt : nullptr, grads.dw[ii].data(),
                                grads.db[ii].data(), pool);
                break;
            case LayerKind::TConv1d:
                tconv1d_backward(in, g.weights[ii].data(), s.out_ch, s.kernel, s.stride,
                                 s.pad, *cur, need_gin ? nxt : nullptr,
                                 grads.dw[ii].data(), grads.db[ii].data(), pool);
                break;
            case LayerKind::MaxPool1d:
                maxpool1d_backward(in.l, *cur, ws.argmax[ii], *nxt, pool);
                break;
            case LayerKind::Upsample1d:
                upsample1d_backward(in.l, s.factor, *cur, *nxt, pool);
                break;
            case LayerKind::Dense:
                dense_backward(in, g.weights[ii].data(), s.units, *cur,
                               need_gin ? nxt : nullptr, grads.dw[ii].data(),
                               grads.db[ii].data(), pool);
                break;
            case LayerKind::Relu:
                relu_backward(in, *cur, *nxt, pool);
                break;
            case LayerKind::Dropout:
                if (!ws.mask[ii].empty())
                    dropout_backward(ws.mask[ii], *cur, *nxt, pool);
                else
                    *nxt = *cur;
                break;
            case LayerKind::Flatten:
            case LayerKind::Reshape:
                *nxt = *cur;
                nxt->c = in.c;
                nxt->l = in.l;
                break;
        }
        const bool has_params = s.kind == LayerKind::Conv1d || s.kind == LayerKind::TConv1d ||
                                s.kind == LayerKind::Dense;
        const bool wrote_gin = !has_params || need_gin;
        if (wrote_gin) {
            check_finite(*nxt, g, ii, "backward");
            std::swap(cur, nxt);
        }
    }
    if (gin) *gin = *cur;
}

}  // namespace ws::nn
