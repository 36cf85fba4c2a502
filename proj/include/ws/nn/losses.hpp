#pragma once
#include <cmath>

#include "ws/nn/tensor.hpp"
#include "ws/rng.hpp"

namespace ws::nn {

/// Numerically stable softmax (max subtraction).
template <typename T>
void softmax(const T* logits, int k, T* out) {
    T mx = logits[0];
    for (int i = 1; i < k; ++i) mx = std::max(mx, logits[i]);
    T sum = 0;
    for (int i = 0; i < k; ++i) {
        out[i] = std::exp(logits[i] - mx);
        sum += out[i];
    }
    for (int i = 0; i < k; ++i) out[i] /= sum;
}

/// Weighted cross-entropy: loss = -w[y] * log softmax(logits)[y],
/// grad = w[y] * (softmax - onehot). Throws NumericError on non-finite logits.
template <typename T>
T softmax_cross_entropy(const T* logits, int k, int true_class, const T* class_weights,
                        T* grad) {
    for (int i = 0; i < k; ++i)
        if (!std::isfinite(static_cast<double>(logits[i])))
            throw NumericError("softmax_cross_entropy: non-finite logit");
    T mx = logits[0];
    for (int i = 1; i < k; ++i) mx = std::max(mx, logits[i]);
    T sum = 0;
    for (int i = 0; i < k; ++i) sum += std::exp(logits[i] - mx);
    T log_sum = std::log(sum);
    const T w = class_weights ? class_weights[true_class] : T(1);
    T loss = -w * (logits[true_class] - mx - log_sum);
    if (grad) {
        for (int i = 0; i < k; ++i) {
            T p = std::exp(logits[i] - mx) / sum;
            grad[i] = w * (p - (i == true_class ? T(1) : T(0)));
        }
    }
    return loss;
}

/// Mean squared error over all elements; grad = 2 (pred - target) / N.
template <typename T>
T mse_loss(const T* pred, const T* target, size_t n, T* grad) {
    T acc = 0;
    for (size_t i = 0; i < n; ++i) {
        T d = pred[i] - target[i];
        acc += d * d;
        if (grad) grad[i] = T(2) * d / static_cast<T>(n);
    }
    return acc / static_cast<T>(n);
}

/// KL(q || N(0, I)) = -1/2 sum(1 + logvar - mu^2 - exp(logvar)).
/// d/dmu = mu, d/dlogvar = (exp(logvar) - 1) / 2. Gradients accumulate.
template <typename T>
T kl_std_normal(const T* mu, const T* logvar, int d, T* dmu, T* dlogvar, T weight = T(1)) {
    T acc = 0;
    for (int i = 0; i < d; ++i) {
        acc += T(1) + logvar[i] - mu[i] * mu[i] - std::exp(logvar[i]);
        if (dmu) dmu[i] += weight * mu[i];
        if (dlogvar) dlogvar[i] += weight * (std::exp(logvar[i]) - T(1)) / T(2);
    }
    return T(-0.5) * acc;
}

/// z = mu + exp(logvar/2) * eps with eps ~ N(0,1) from the lane stream.
/// eps is cached for the backward pass.
template <typename T>
void reparameterize_forward(const Tensor3<T>& mu, const Tensor3<T>& logvar,
                            Rng* lane_rngs, Tensor3<T>& z, Tensor3<T>& eps) {
    const int D = mu.c, B = mu.b;
    z.resize(D, 1, B);
    eps.resize(D, 1, B);
    // lane-major draw order so each lane consumes its own stream sequentially
    for (int lane = 0; lane < B; ++lane)
        for (int i = 0; i < D; ++i)
            eps.v[static_cast<size_t>(i) * B + lane] =
                static_cast<T>(lane_rngs[lane].normal());
    for (size_t i = 0; i < z.size(); ++i)
        z.v[i] = mu.v[i] + std::exp(logvar.v[i] / T(2)) * eps.v[i];
}

/// dmu += dz; dlogvar += dz * eps * exp(logvar/2) / 2   (eps held fixed).
/// Accumulates; output tensors are zero-initialized only if not yet sized.
template <typename T>
void reparameterize_backward(const Tensor3<T>& logvar, const Tensor3<T>& eps,
                             const Tensor3<T>& dz, Tensor3<T>& dmu, Tensor3<T>& dlogvar) {
    if (dmu.size() != dz.size()) dmu.resize(dz.c, dz.l, dz.b);
    if (dlogvar.size() != dz.size()) dlogvar.resize(dz.c, dz.l, dz.b);
    for (size_t i = 0; i < dz.size(); ++i) {
        dmu.v[i] += dz.v[i];
        dlogvar.v[i] += dz.v[i] * eps.v[i] * std::exp(logvar.v[i] / T(2)) / T(2);
    }
}

}  // namespace ws::nn
