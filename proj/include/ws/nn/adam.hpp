#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

#include "ws/threadpool.hpp"

namespace ws::nn {

/// Flat views over a model's parameter and gradient arrays, in a fixed order.
template <typename T>
struct ParamRefs {
    std::vector<T*> params;
    std::vector<T*> grads;
    std::vector<size_t> sizes;

    void add(std::vector<T>& p, std::vector<T>& g) {
        if (p.empty()) return;
        params.push_back(p.data());
        grads.push_back(g.data());
        sizes.push_back(p.size());
    }
    size_t total() const {
        size_t n = 0;
        for (size_t s : sizes) n += s;
        return n;
    }
};

/// Standard Adam with bias correction: the update is
/// p -= lr * m_hat / (sqrt(v_hat) + eps).
template <typename T>
struct AdamState {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    int64_t step = 0;
    std::vector<std::vector<T>> m, v;

    void match(const ParamRefs<T>& refs) {
        m.resize(refs.sizes.size());
        v.resize(refs.sizes.size());
        for (size_t i = 0; i < refs.sizes.size(); ++i) {
            m[i].assign(refs.sizes[i], T(0));
            v[i].assign(refs.sizes[i], T(0));
        }
    }
};

template <typename T>
void adam_update_array(T* p, const T* g, T* m, T* v, size_t n, int64_t step, double lr,
                       double beta1, double beta2, double eps, ThreadPool* pool);

/// One optimizer step over every parameter array; increments the counter.
template <typename T>
void adam_step(ParamRefs<T>& refs, AdamState<T>& state, ThreadPool* pool = nullptr) {
    state.step++;
    for (size_t i = 0; i < refs.sizes.size(); ++i)
        adam_update_array(refs.params[i], refs.grads[i], state.m[i].data(),
                          state.v[i].data(), refs.sizes[i], state.step, state.lr,
                          state.beta1, state.beta2, state.eps, pool);
}

template <typename T>
void adam_update_array(T* p, const T* g, T* m, T* v, size_t n, int64_t step, double lr,
                       double beta1, double beta2, double eps, ThreadPool* pool) {
    const T b1 = static_cast<T>(beta1), b2 = static_cast<T>(beta2);
    const T corr1 = static_cast<T>(1.0 - std::pow(beta1, static_cast<double>(step)));
    const T corr2 = static_cast<T>(1.0 - std::pow(beta2, static_cast<double>(step)));
    const T a = static_cast<T>(lr), e = static_cast<T>(eps);
    auto body = [&](size_t i0, size_t i1) {
        for (size_t i = i0; i < i1; ++i) {
            m[i] = b1 * m[i] + (T(1) - b1) * g[i];
            v[i] = b2 * v[i] + (T(1) - b2) * g[i] * g[i];
            T mhat = m[i] / corr1;
            T vhat = v[i] / corr2;
            p[i] -= a * mhat / (std::sqrt(vhat) + e);
        }
    };
    if (pool && n > 4096)
        pool->parallel_chunks(n, body);
    else
        body(0, n);
}

}  // namespace ws::nn
