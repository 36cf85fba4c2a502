#pragma once
#include <cstddef>
#include <vector>

#include "ws/types.hpp"

namespace ws::nn {

/// Activation block: (channels, length, lanes). The lane axis is the batch
/// dimension and is innermost so every kernel vectorizes on it. Feature
/// vectors use shape (features, 1, lanes).
template <typename T>
struct Tensor3 {
    int c = 0, l = 0, b = 0;
    std::vector<T> v;

    Tensor3() = default;
    Tensor3(int c_, int l_, int b_) { resize(c_, l_, b_); }

    void resize(int c_, int l_, int b_) {
        c = c_;
        l = l_;
        b = b_;
        v.assign(static_cast<size_t>(c) * l * b, T(0));
    }
    size_t size() const { return v.size(); }
    T* data() { return v.data(); }
    const T* data() const { return v.data(); }
    T& at(int ci, int x, int lane) { return v[(static_cast<size_t>(ci) * l + x) * b + lane]; }
    T at(int ci, int x, int lane) const {
        return v[(static_cast<size_t>(ci) * l + x) * b + lane];
    }
    void zero() { std::fill(v.begin(), v.end(), T(0)); }
};

}  // namespace ws::nn
