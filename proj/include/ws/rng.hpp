#pragma once
#include <cstddef>
#include <cstdint>

namespace ws {

/// Deterministic xoshiro256** generator with splitmix64 seeding.
/// All pipeline randomness flows through this type so that runs are
/// bit-reproducible across platforms; std:: distributions are
/// implementation-defined and are not used anywhere.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform integer in [0, n).
    uint64_t uniform_below(uint64_t n);

    /// Standard normal via Box-Muller (no cached spare, fixed draw order).
    double normal();

    /// Independent child stream keyed by `stream`. Children of the same
    /// parent with distinct keys are statistically independent.
    Rng derive(uint64_t stream) const;

    /// Fisher-Yates shuffle of an index array.
    template <typename T>
    void shuffle(T* data, std::size_t n) {
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            T tmp = data[i - 1];
            data[i - 1] = data[j];
            data[j] = tmp;
        }
    }

private:
    uint64_t s_[4];
};

/// 64-bit FNV-1a, used for config hashing and stream derivation from tags.
uint64_t fnv1a64(const void* data, std::size_t n, uint64_t seed = 0xcbf29ce484222325ull);
uint64_t fnv1a64_str(const char* s, uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace ws
