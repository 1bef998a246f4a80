#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace uswsim {

// One splitmix64 step. Good enough as a mixing function for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives the seed for sub-stream `index` of a master seed. Sweeps hand
// derive_seed(master, i) to repetition i so any one cell of a sweep can be
// reproduced on its own.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

// Deterministic random source. mt19937_64 underneath, but bounded ints and
// doubles are produced with fixed algorithms instead of std::uniform_*
// distributions, whose output differs between standard libraries. Same seed,
// same stream, regardless of platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t bound) {
        assert(bound > 0);
        if (bound == 1) return 0;
        // largest multiple of bound that fits in 64 bits
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform on [0, 1), 53 random mantissa bits.
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Fisher-Yates, driven by uniform_int so the permutation is stable
    // across standard libraries.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices drawn uniformly from [0, n), in draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        assert(k <= n);
        // partial Fisher-Yates over an index vector; fine for the sizes we use
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(uniform_int(n - i));
            std::swap(idx[i], idx[j]);
            out.push_back(idx[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace uswsim
