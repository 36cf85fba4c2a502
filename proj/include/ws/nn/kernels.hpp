#pragma once
#include <algorithm>
#include <cmath>

#include "ws/nn/tensor.hpp"
#include "ws/rng.hpp"
#include "ws/threadpool.hpp"

// Layer kernels. Activations are (C, L, B) with the lane axis innermost.
// Parallel splits always assign whole output rows (channels/units) to one
// worker, so results are bit-identical for any thread count.

namespace ws::nn {

enum class Padding : uint32_t { Valid = 0, Same = 1, Full = 2 };

inline void run_chunks(ThreadPool* pool, size_t n,
                       const std::function<void(size_t, size_t)>& fn) {
    if (pool && n > 1)
        pool->parallel_chunks(n, fn);
    else if (n > 0)
        fn(0, n);
}

// ---- conv1d (stride 1, cross-correlation) --------------------------------

inline int conv_out_len(int L, int K, Padding pad) {
    if (pad == Padding::Same) return L;
    if (pad == Padding::Valid) return L - K + 1;
    return L + K - 1;  // Full
}

template <typename T>
void conv1d_forward(const Tensor3<T>& in, const T* w, const T* bias, int cout, int K,
                    Padding pad, Tensor3<T>& out, ThreadPool* pool) {
    const int cin = in.c, L = in.l, B = in.b;
    const int P = pad == Padding::Same ? (K - 1) / 2 : 0;
    const int Lout = conv_out_len(L, K, pad);
    if (pad == Padding::Valid && K > L)
        throw std::invalid_argument("conv1d: kernel longer than input");
    out.resize(cout, Lout, B);
    run_chunks(pool, cout, [&](size_t co0, size_t co1) {
        for (size_t co = co0; co < co1; ++co) {
            T* orow = out.data() + co * static_cast<size_t>(Lout) * B;
            const T bv = bias[co];
            for (int i = 0; i < Lout * B; ++i) orow[i] = bv;
            for (int ci = 0; ci < cin; ++ci) {
                const T* irow = in.data() + static_cast<size_t>(ci) * L * B;
                const T* wk = w + (co * cin + ci) * K;
                for (int k = 0; k < K; ++k) {
                    const T wv = wk[k];
                    const int off = k - P;  // out[x] += w * in[x+off]
                    const int x0 = std::max(0, -off);
                    const int x1 = std::min(Lout, L - off);
                    const T* s = irow + static_cast<size_t>(x0 + off) * B;
                    T* o = orow + static_cast<size_t>(x0) * B;
                    const int n = (x1 - x0) * B;
                    for (int i = 0; i < n; ++i) o[i] += wv * s[i];
                }
            }
        }
    });
}

template <typename T>
void conv1d_backward(const Tensor3<T>& in, const T* w, int cout, int K, Padding pad,
                     const Tensor3<T>& gout, Tensor3<T>* gin, T* dw, T* db,
                     ThreadPool* pool) {
    const int cin = in.c, L = in.l, B = in.b;
    const int P = pad == Padding::Same ? (K - 1) / 2 : 0;
    const int Lout = gout.l;
    if (gin) {
        gin->resize(cin, L, B);
        run_chunks(pool, cin, [&](size_t ci0, size_t ci1) {
            for (size_t ci = ci0; ci < ci1; ++ci) {
                T* grow = gin->data() + ci * static_cast<size_t>(L) * B;
                for (int co = 0; co < cout; ++co) {
                    const T* gr = gout.data() + static_cast<size_t>(co) * Lout * B;
                    const T* wk = w + (static_cast<size_t>(co) * cin + ci) * K;
                    for (int k = 0; k < K; ++k) {
                        const T wv = wk[k];
                        const int off = k - P;  // gin[p] += w * gout[p - off]
                        const int x0 = std::max(0, -off);
                        const int x1 = std::min(Lout, L - off);
                        const T* s = gr + static_cast<size_t>(x0) * B;
                        T* o = grow + static_cast<size_t>(x0 + off) * B;
                        const int n = (x1 - x0) * B;
                        for (int i = 0; i < n; ++i) o[i] += wv * s[i];
                    }
                }
            }
        });
    }
    if (dw) {
        run_chunks(pool, cout, [&](size_t co0, size_t co1) {
            for (size_t co = co0; co < co1; ++co) {
                const T* gr = gout.data() + co * static_cast<size_t>(Lout) * B;
                for (int ci = 0; ci < cin; ++ci) {
                    const T* irow = in.data() + static_cast<size_t>(ci) * L * B;
                    for (int k = 0; k < K; ++k) {
                        const int off = k - P;
                        const int x0 = std::max(0, -off);
                        const int x1 = std::min(Lout, L - off);
                        const T* s = irow + static_cast<size_t>(x0 + off) * B;
                        const T* g = gr + static_cast<size_t>(x0) * B;
                        T acc = 0;
                        const int n = (x1 - x0) * B;
                        for (int i = 0; i < n; ++i) acc += g[i] * s[i];
                        dw[(co * cin + ci) * K + k] += acc;
                    }
                }
                T bacc = 0;
                for (int i = 0; i < Lout * B; ++i) bacc += gr[i];
                db[co] += bacc;
            }
        });
    }
}

// ---- transposed conv1d ----------------------------------------------------
// Weights are (C_in, C_out, K): reading a conv's (C_out, C_in, K) buffer
// through this layout makes the operation the exact adjoint of that conv.

inline int tconv_out_len(int L, int K, int stride, Padding pad) {
    if (pad == Padding::Same) return L;   // stride 1 only
    return (L - 1) * stride + K;          // Full
}

template <typename T>
void tconv1d_forward(const Tensor3<T>& in, const T* w, const T* bias, int cout, int K,
                     int stride, Padding pad, Tensor3<T>& out, ThreadPool* pool) {
    const int cin = in.c, L = in.l, B = in.b;
    if (pad == Padding::Same && stride != 1)
        throw std::invalid_argument("tconv1d: same padding requires stride 1");
    const int P = pad == Padding::Same ? (K - 1) / 2 : 0;
    const int Lout = tconv_out_len(L, K, stride, pad);
    out.resize(cout, Lout, B);
    run_chunks(pool, cout, [&](size_t co0, size_t co1) {
        for (size_t co = co0; co < co1; ++co) {
            T* orow = out.data() + co * static_cast<size_t>(Lout) * B;
            const T bv = bias ? bias[co] : T(0);
            for (int i = 0; i < Lout * B; ++i) orow[i] = bv;
            for (int ci = 0; ci < cin; ++ci) {
                const T* irow = in.data() + static_cast<size_t>(ci) * L * B;
                const T* wk = w + (static_cast<size_t>(ci) * cout + co) * K;
                for (int k = 0; k < K; ++k) {
                    const T wv = wk[k];
                    // out[t*stride + k - P] += w * in[t]
                    for (int t = 0; t < L; ++t) {
                        const int p = t * stride + k - P;
                        if (p < 0 || p >= Lout) continue;
                        T* o = orow + static_cast<size_t>(p) * B;
                        const T* s = irow + static_cast<size_t>(t) * B;
                        for (int lane = 0; lane < B; ++lane) o[lane] += wv * s[lane];
                    }
                }
            }
        }
    });
}

template <typename T>
void tconv1d_backward(const Tensor3<T>& in, const T* w, int cout, int K, int stride,
                      Padding pad, const Tensor3<T>& gout, Tensor3<T>* gin, T* dw, T* db,
                      ThreadPool* pool) {
    const int cin = in.c, L = in.l, B = in.b;
    const int P = pad == Padding::Same ? (K - 1) / 2 : 0;
    const int Lout = gout.l;
    if (gin) {
        gin->resize(cin, L, B);
        run_chunks(pool, cin, [&](size_t ci0, size_t ci1) {
            for (size_t ci = ci0; ci < ci1; ++ci) {
                T* grow = gin->data() + ci * static_cast<size_t>(L) * B;
                for (int co = 0; co < cout; ++co) {
                    const T* gr = gout.data() + static_cast<size_t>(co) * Lout * B;
                    const T* wk = w + (ci * static_cast<size_t>(cout) + co) * K;
                    for (int k = 0; k < K; ++k) {
                        const T wv = wk[k];
                        for (int t = 0; t < L; ++t) {
                            const int p = t * stride + k - P;
                            if (p < 0 || p >= Lout) continue;
                            const T* s = gr + static_cast<size_t>(p) * B;
                            T* o = grow + static_cast<size_t>(t) * B;
                            for (int lane = 0; lane < B; ++lane) o[lane] += wv * s[lane];
                        }
                    }
                }
            }
        });
    }
    if (dw) {
        run_chunks(pool, cin, [&](size_t ci0, size_t ci1) {
            for (size_t ci = ci0; ci < ci1; ++ci) {
                const T* irow = in.data() + ci * static_cast<size_t>(L) * B;
                for (int co = 0; co < cout; ++co) {
                    const T* gr = gout.data() + static_cast<size_t>(co) * Lout * B;
                    for (int k = 0; k < K; ++k) {
                        T acc = 0;
                        for (int t = 0; t < L; ++t) {
                            const int p = t * stride + k - P;
                            if (p < 0 || p >= Lout) continue;
                            const T* s = irow + static_cast<size_t>(t) * B;
                            const T* g = gr + static_cast<size_t>(p) * B;
                            for (int lane = 0; lane < B; ++lane) acc += g[lane] * s[lane];
                        }
                        dw[(ci * static_cast<size_t>(cout) + co) * K + k] += acc;
                    }
                }
            }
        });
    }
    if (db) {
        // bias rows belong to cout; separate pass keeps ownership disjoint
        run_chunks(pool, cout, [&](size_t co0, size_t co1) {
            for (size_t co = co0; co < co1; ++co) {
                const T* gr = gout.data() + co * static_cast<size_t>(Lout) * B;
                T acc = 0;
                for (int i = 0; i < Lout * B; ++i) acc += gr[i];
                db[co] += acc;
            }
        });
    }
}

// ---- max pooling -----------------------------------------------------------

inline int pool_out_len(int L, int pool, int stride) {
    if (L < pool) return 0;
    return (L - pool) / stride + 1;
}

template <typename T>
void maxpool1d_forward(const Tensor3<T>& in, int pool_len, int stride, Tensor3<T>& out,
                       std::vector<int32_t>& argmax, ThreadPool* pool) {
    const int C = in.c, L = in.l, B = in.b;
    const int Lout = pool_out_len(L, pool_len, stride);
    out.resize(C, Lout, B);
    argmax.assign(out.size(), 0);
    run_chunks(pool, C, [&](size_t c0, size_t c1) {
        for (size_t c = c0; c < c1; ++c) {
            const T* irow = in.data() + c * static_cast<size_t>(L) * B;
            T* orow = out.data() + c * static_cast<size_t>(Lout) * B;
            int32_t* am = argmax.data() + c * static_cast<size_t>(Lout) * B;
            for (int x = 0; x < Lout; ++x) {
                const int base = x * stride;
                for (int lane = 0; lane < B; ++lane) {
                    T best = irow[static_cast<size_t>(base) * B + lane];
                    int bi = base;
                    for (int k = 1; k < pool_len; ++k) {
                        T v = irow[static_cast<size_t>(base + k) * B + lane];
                        if (v > best) {  // first maximum wins ties
                            best = v;
                            bi = base + k;
                        }
                    }
                    orow[static_cast<size_t>(x) * B + lane] = best;
                    am[static_cast<size_t>(x) * B + lane] = bi;
                }
            }
        }
    });
}

template <typename T>
void maxpool1d_backward(int in_len, const Tensor3<T>& gout,
                        const std::vector<int32_t>& argmax, Tensor3<T>& gin,
                        ThreadPool* pool) {
    const int C = gout.c, Lout = gout.l, B = gout.b;
    gin.resize(C, in_len, B);
    run_chunks(pool, C, [&](size_t c0, size_t c1) {
        for (size_t c = c0; c < c1; ++c) {
            const T* gr = gout.data() + c * static_cast<size_t>(Lout) * B;
            const int32_t* am = argmax.data() + c * static_cast<size_t>(Lout) * B;
            T* gi = gin.data() + c * static_cast<size_t>(in_len) * B;
            for (int x = 0; x < Lout; ++x)
                for (int lane = 0; lane < B; ++lane)
                    gi[static_cast<size_t>(am[static_cast<size_t>(x) * B + lane]) * B + lane] +=
                        gr[static_cast<size_t>(x) * B + lane];
        }
    });
}

// ---- nearest-neighbor upsampling -------------------------------------------

template <typename T>
void upsample1d_forward(const Tensor3<T>& in, int factor, Tensor3<T>& out,
                        ThreadPool* pool) {
    const int C = in.c, L = in.l, B = in.b;
    out.resize(C, L * factor, B);
    run_chunks(pool, C, [&](size_t c0, size_t c1) {
        for (size_t c = c0; c < c1; ++c) {
            const T* irow = in.data() + c * static_cast<size_t>(L) * B;
            T* orow = out.data() + c * static_cast<size_t>(L) * factor * B;
            for (int x = 0; x < L; ++x)
                for (int r = 0; r < factor; ++r)
                    std::copy(irow + static_cast<size_t>(x) * B,
                              irow + static_cast<size_t>(x + 1) * B,
                              orow + (static_cast<size_t>(x) * factor + r) * B);
        }
    });
}

template <typename T>
void upsample1d_backward(int in_len, int factor, const Tensor3<T>& gout, Tensor3<T>& gin,
                         ThreadPool* pool) {
    const int C = gout.c, B = gout.b;
    gin.resize(C, in_len, B);
    run_chunks(pool, C, [&](size_t c0, size_t c1) {
        for (size_t c = c0; c < c1; ++c) {
            const T* gr = gout.data() + c * static_cast<size_t>(in_len) * factor * B;
            T* gi = gin.data() + c * static_cast<size_t>(in_len) * B;
            for (int x = 0; x < in_len; ++x)
                for (int r = 0; r < factor; ++r)
                    for (int lane = 0; lane < B; ++lane)
                        gi[static_cast<size_t>(x) * B + lane] +=
                            gr[(static_cast<size_t>(x) * factor + r) * B + lane];
        }
    });
}

// ---- dense ------------------------------------------------------------------

template <typename T>
void dense_forward(const Tensor3<T>& in, const T* w, const T* bias, int units,
                   Tensor3<T>& out, ThreadPool* pool) {
    const int F = in.c * in.l, B = in.b;
    out.resize(units, 1, B);
    run_chunks(pool, units, [&](size_t u0, size_t u1) {
        for (size_t u = u0; u < u1; ++u) {
            T* o = out.data() + u * B;
            const T bv = bias[u];
            for (int lane = 0; lane < B; ++lane) o[lane] = bv;
            const T* wr = w + u * static_cast<size_t>(F);
            const T* s = in.data();
            for (int f = 0; f < F; ++f) {
                const T wv = wr[f];
                for (int lane = 0; lane < B; ++lane) o[lane] += wv * s[static_cast<size_t>(f) * B + lane];
            }
        }
    });
}

template <typename T>
void dense_backward(const Tensor3<T>& in, const T* w, int units, const Tensor3<T>& gout,
                    Tensor3<T>* gin, T* dw, T* db, ThreadPool* pool) {
    const int F = in.c * in.l, B = in.b;
    if (dw) {
        run_chunks(pool, units, [&](size_t u0, size_t u1) {
            for (size_t u = u0; u < u1; ++u) {
                const T* g = gout.data() + u * B;
                T* dwr = dw + u * static_cast<size_t>(F);
                for (int f = 0; f < F; ++f) {
                    const T* s = in.data() + static_cast<size_t>(f) * B;
                    T acc = 0;
                    for (int lane = 0; lane < B; ++lane) acc += g[lane] * s[lane];
                    dwr[f] += acc;
                }
                T bacc = 0;
                for (int lane = 0; lane < B; ++lane) bacc += g[lane];
                db[u] += bacc;
            }
        });
    }
    if (gin) {
        gin->resize(in.c, in.l, B);
        run_chunks(pool, F, [&](size_t f0, size_t f1) {
            for (size_t f = f0; f < f1; ++f) {
                T* gi = gin->data() + f * B;
                for (int u = 0; u < units; ++u) {
                    const T wv = w[static_cast<size_t>(u) * F + f];
                    const T* g = gout.data() + static_cast<size_t>(u) * B;
                    for (int lane = 0; lane < B; ++lane) gi[lane] += wv * g[lane];
                }
            }
        });
    }
}

// ---- relu / dropout ----------------------------------------------------------

template <typename T>
void relu_forward(const Tensor3<T>& in, Tensor3<T>& out, ThreadPool* pool) {
    out.resize(in.c, in.l, in.b);
    const size_t n = in.size();
    run_chunks(pool, n, [&](size_t i0, size_t i1) {
        const T* s = in.data();
        T* o = out.data();
        for (size_t i = i0; i < i1; ++i) o[i] = s[i] > T(0) ? s[i] : T(0);
    });
}

template <typename T>
void relu_backward(const Tensor3<T>& in, const Tensor3<T>& gout, Tensor3<T>& gin,
                   ThreadPool* pool) {
    gin.resize(in.c, in.l, in.b);
    const size_t n = in.size();
    run_chunks(pool, n, [&](size_t i0, size_t i1) {
        const T* s = in.data();
        const T* g = gout.data();
        T* o = gin.data();
        for (size_t i = i0; i < i1; ++i) o[i] = s[i] > T(0) ? g[i] : T(0);
    });
}

/// Inverted dropout. Masks are drawn per lane from that lane's stream in
/// element order, so results do not depend on the thread count.
template <typename T>
void dropout_forward_train(const Tensor3<T>& in, double rate, Rng* lane_rngs,
                           Tensor3<T>& out, std::vector<T>& mask, ThreadPool* pool) {
    if (rate < 0.0 || rate >= 1.0) throw std::invalid_argument("dropout: rate must be in [0,1)");
    const int B = in.b;
    const size_t rows = in.size() / B;
    out.resize(in.c, in.l, in.b);
    mask.assign(in.size(), T(0));
    const T scale = static_cast<T>(1.0 / (1.0 - rate));
    run_chunks(pool, B, [&](size_t l0, size_t l1) {
        for (size_t lane = l0; lane < l1; ++lane) {
            Rng& rng = lane_rngs[lane];
            for (size_t r = 0; r < rows; ++r) {
                const size_t idx = r * B + lane;
                T m = rng.uniform() >= rate ? scale : T(0);
                mask[idx] = m;
                out.v[idx] = in.v[idx] * m;
            }
        }
    });
}

template <typename T>
void dropout_backward(const std::vector<T>& mask, const Tensor3<T>& gout, Tensor3<T>& gin,
                      ThreadPool* pool) {
    gin.resize(gout.c, gout.l, gout.b);
    const size_t n = gout.size();
    run_chunks(pool, n, [&](size_t i0, size_t i1) {
        for (size_t i = i0; i < i1; ++i) gin.v[i] = gout.v[i] * mask[i];
    });
}

}  // namespace ws::nn
