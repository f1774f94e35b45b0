#pragma once

#include <cstddef>

namespace mira::kernels {

// Dense float kernels behind the embedding math (k-means assignment scans,
// nearest-neighbor statistics, normalization). Two implementations: a scalar
// reference and an AVX2 variant; the active set is chosen once at startup.
// SIMD reductions reassociate additions, so the variants agree to float
// rounding, not bit-exactly; equivalence tests bound the difference.
struct Ops {
    float (*dot)(const float* a, const float* b, std::size_t n);
    float (*squared_l2)(const float* a, const float* b, std::size_t n);
    void (*scale)(float* a, std::size_t n, float s);
    const char* name;
};

const Ops& scalar_ops();

// Scalar unless the CPU supports AVX2. Set MIRA_FORCE_SCALAR=1 in the
// environment to pin the scalar path (checked once, before first use).
const Ops& active_ops();

inline float dot(const float* a, const float* b, std::size_t n) {
    return active_ops().dot(a, b, n);
}

inline float squared_l2(const float* a, const float* b, std::size_t n) {
    return active_ops().squared_l2(a, b, n);
}

inline void scale(float* a, std::size_t n, float s) { active_ops().scale(a, n, s); }

}  // namespace mira::kernels
