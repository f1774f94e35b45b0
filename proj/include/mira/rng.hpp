#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace mira {

// FNV-1a, used wherever a stable cross-platform string hash is needed
// (per-source RNG streams, mock backend, hashed embedder).
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over the xor; cheap and well distributed
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// SplitMix64. Hand-rolled instead of <random> engines/distributions so that
// sampling, splitting and k-means seeding are bit-reproducible across
// standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one value per call, spare discarded:
    // keeps the consumption pattern independent of call sites).
    double normal() {
        double u1, u2;
        do {
            u1 = real();
        } while (u1 <= 1e-300);
        u2 = real();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace mira
