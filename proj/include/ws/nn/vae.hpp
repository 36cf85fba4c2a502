#pragma once
#include "ws/nn/adam.hpp"
#include "ws/nn/graph.hpp"
#include "ws/nn/losses.hpp"

namespace ws::nn {

/// Convolutional VAE: sequential encoder ending in a flatten, two dense
/// heads producing (mu, logvar), a reparameterized latent, and a sequential
/// decoder mapping the latent back to the input shape.
template <typename T>
struct ConvVae {
    ModelGraph<T> encoder;
    ModelGraph<T> decoder;
    int latent_dim = 0;
    int enc_features = 0;  // flattened encoder output size
    std::vector<T> w_mu, b_mu, w_lv, b_lv;

    void init_params(Rng& rng) {
        Rng enc_rng = rng.derive(1), dec_rng = rng.derive(2), head_rng = rng.derive(3);
        encoder.init_params(enc_rng, /*zero_last_dense=*/false);
        decoder.init_params(dec_rng, /*zero_last_dense=*/false);
        double stddev = std::sqrt(1.0 / static_cast<double>(enc_features));
        for (auto& w : w_mu) w = static_cast<T>(head_rng.normal() * stddev);
        for (auto& w : w_lv) w = static_cast<T>(head_rng.normal() * stddev);
    }

    size_t param_count() const {
        return encoder.param_count() + decoder.param_count() + w_mu.size() + b_mu.size() +
               w_lv.size() + b_lv.size();
    }

    template <typename U>
    ConvVae<U> cast() const {
        ConvVae<U> o;
        o.encoder = encoder.template cast<U>();
        o.decoder = decoder.template cast<U>();
        o.latent_dim = latent_dim;
        o.enc_features = enc_features;
        o.w_mu.assign(w_mu.begin(), w_mu.end());
        o.b_mu.assign(b_mu.begin(), b_mu.end());
        o.w_lv.assign(w_lv.begin(), w_lv.end());
        o.b_lv.assign(b_lv.begin(), b_lv.end());
        return o;
    }
};

template <typename T>
struct VaeGrads {
    GradStore<T> enc, dec;
    std::vector<T> dw_mu, db_mu, dw_lv, db_lv;

    void match(const ConvVae<T>& m) {
        enc.match(m.encoder);
        dec.match(m.decoder);
        dw_mu.assign(m.w_mu.size(), T(0));
        db_mu.assign(m.b_mu.size(), T(0));
        dw_lv.assign(m.w_lv.size(), T(0));
        db_lv.assign(m.b_lv.size(), T(0));
    }
    void zero() {
        enc.zero();
        dec.zero();
        std::fill(dw_mu.begin(), dw_mu.end(), T(0));
        std::fill(db_mu.begin(), db_mu.end(), T(0));
        std::fill(dw_lv.begin(), dw_lv.end(), T(0));
        std::fill(db_lv.begin(), db_lv.end(), T(0));
    }
};

template <typename T>
struct VaeWorkspace {
    Workspace<T> enc_ws, dec_ws;
    Tensor3<T> mu, logvar, z, eps;
    Tensor3<T> drecon, dz, dmu, dlv, denc, denc2;
};

template <typename T>
ParamRefs<T> collect_params(ModelGraph<T>& g, GradStore<T>& grads) {
    ParamRefs<T> refs;
    for (size_t i = 0; i < g.weights.size(); ++i) {
        refs.add(g.weights[i], grads.dw[i]);
        refs.add(g.biases[i], grads.db[i]);
    }
    return refs;
}

template <typename T>
ParamRefs<T> collect_params(ConvVae<T>& m, VaeGrads<T>& grads) {
    ParamRefs<T> refs = collect_params(m.encoder, grads.enc);
    refs.add(m.w_mu, grads.dw_mu);
    refs.add(m.b_mu, grads.db_mu);
    refs.add(m.w_lv, grads.dw_lv);
    refs.add(m.b_lv, grads.db_lv);
    ParamRefs<T> dec = collect_params(m.decoder, grads.dec);
    for (size_t i = 0; i < dec.sizes.size(); ++i) {
        refs.params.push_back(dec.params[i]);
        refs.grads.push_back(dec.grads[i]);
        refs.sizes.push_back(dec.sizes[i]);
    }
    return refs;
}

/// Training forward + backward over one lane block. lane_scale[b] weights
/// lane b's loss gradient (0 for padding lanes); returns per-lane
/// (mse, kl) pairs via out arrays. beta scales the KL term.
template <typename T>
void vae_train_block(ConvVae<T>& m, const Tensor3<T>& x, Rng* lane_rngs,
                     const std::vector<T>& lane_scale, double beta, VaeWorkspace<T>& ws,
                     VaeGrads<T>& grads, std::vector<T>& mse_out, std::vector<T>& kl_out,
                     ThreadPool* pool) {
    const int B = x.b, D = m.latent_dim;
    const auto& enc_out = graph_forward(m.encoder, x, Mode::Train, lane_rngs, ws.enc_ws, pool);
    dense_forward(enc_out, m.w_mu.data(), m.b_mu.data(), D, ws.mu, pool);
    dense_forward(enc_out, m.w_lv.data(), m.b_lv.data(), D, ws.logvar, pool);
    reparameterize_forward(ws.mu, ws.logvar, lane_rngs, ws.z, ws.eps);
    const auto& recon = graph_forward(m.decoder, ws.z, Mode::Train, lane_rngs, ws.dec_ws, pool);

    const size_t rows = recon.size() / B;
    ws.drecon.resize(recon.c, recon.l, B);
    mse_out.assign(B, T(0));
    kl_out.assign(B, T(0));
    for (size_t r = 0; r < rows; ++r)
        for (int lane = 0; lane < B; ++lane) {
            size_t i = r * B + lane;
            T d = recon.v[i] - x.v[i];
            mse_out[lane] += d * d;
            ws.drecon.v[i] = T(2) * d / static_cast<T>(rows) * lane_scale[lane];
        }
    for (int lane = 0; lane < B; ++lane) mse_out[lane] /= static_cast<T>(rows);

    // KL per lane plus its gradient contributions
    ws.dmu.resize(D, 1, B);
    ws.dlv.resize(D, 1, B);
    for (int lane = 0; lane < B; ++lane) {
        T acc = 0;
        for (int i = 0; i < D; ++i) {
            size_t idx = static_cast<size_t>(i) * B + lane;
            T muv = ws.mu.v[idx], lvv = ws.logvar.v[idx];
            acc += T(1) + lvv - muv * muv - std::exp(lvv);
            T w = static_cast<T>(beta) * lane_scale[lane];
            ws.dmu.v[idx] = w * muv;
            ws.dlv.v[idx] = w * (std::exp(lvv) - T(1)) / T(2);
        }
        kl_out[lane] = T(-0.5) * acc;
    }

    graph_backward(m.decoder, ws.dec_ws, ws.drecon, grads.dec, &ws.dz, pool);
    reparameterize_backward(ws.logvar, ws.eps, ws.dz, ws.dmu, ws.dlv);
    dense_backward(enc_out, m.w_mu.data(), D, ws.dmu, &ws.denc, grads.dw_mu.data(),
                   grads.db_mu.data(), pool);
    dense_backward(enc_out, m.w_lv.data(), D, ws.dlv, &ws.denc2, grads.dw_lv.data(),
                   grads.db_lv.data(), pool);
    for (size_t i = 0; i < ws.denc.size(); ++i) ws.denc.v[i] += ws.denc2.v[i];
    graph_backward(m.encoder, ws.enc_ws, ws.denc, grads.enc, static_cast<Tensor3<T>*>(nullptr), pool);
}

/// Deterministic evaluation: decode from z = mu (no sampling); returns the
/// per-lane reconstruction MSE. Also exposes mu/kl for validation loss.
template <typename T>
void vae_eval_block(const ConvVae<T>& m, const Tensor3<T>& x, VaeWorkspace<T>& ws,
                    std::vector<T>& mse_out, std::vector<T>& kl_out, ThreadPool* pool) {
    const int B = x.b, D = m.latent_dim;
    const auto& enc_out = graph_forward(m.encoder, x, Mode::Eval, nullptr, ws.enc_ws, pool);
    dense_forward(enc_out, m.w_mu.data(), m.b_mu.data(), D, ws.mu, pool);
    dense_forward(enc_out, m.w_lv.data(), m.b_lv.data(), D, ws.logvar, pool);
    const auto& recon = graph_forward(m.decoder, ws.mu, Mode::Eval, nullptr, ws.dec_ws, pool);
    const size_t rows = recon.size() / B;
    mse_out.assign(B, T(0));
    kl_out.assign(B, T(0));
    for (size_t r = 0; r < rows; ++r)
        for (int lane = 0; lane < B; ++lane) {
            size_t i = r * B + lane;
            T d = recon.v[i] - x.v[i];
            mse_out[lane] += d * d;
        }
    for (int lane = 0; lane < B; ++lane) mse_out[lane] /= static_cast<T>(rows);
    for (int lane = 0; lane < B; ++lane) {
        T acc = 0;
        for (int i = 0; i < D; ++i) {
            size_t idx = static_cast<size_t>(i) * B + lane;
            acc += T(1) + ws.logvar.v[idx] - ws.mu.v[idx] * ws.mu.v[idx] -
                   std::exp(ws.logvar.v[idx]);
        }
        kl_out[lane] = T(-0.5) * acc;
    }
}

}  // namespace ws::nn
