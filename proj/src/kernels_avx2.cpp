// AVX2 variants. Built with -mavx2 for this translation unit only; the
// dispatcher guarantees these are never called on CPUs without AVX2.

#include "mira/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace mira::kernels {

namespace {

inline float hsum256(__m256 v) {
    // fixed-order reduction: (lo+hi), then pairwise
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    __m128 s = _mm_add_ps(lo, hi);
    s = _mm_add_ps(s, _mm_movehl_ps(s, s));
    s = _mm_add_ss(s, _mm_shuffle_ps(s, s, 0x55));
    return _mm_cvtss_f32(s);
}

float dot_avx2(const float* a, const float* b, std::size_t n) {
    __m256 acc = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        acc = _mm256_add_ps(acc, _mm256_mul_ps(va, vb));
    }
    float tail = 0.0f;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum256(acc) + tail;
}

float squared_l2_avx2(const float* a, const float* b, std::size_t n) {
    __m256 acc = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 d = _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        acc = _mm256_add_ps(acc, _mm256_mul_ps(d, d));
    }
    float tail = 0.0f;
    for (; i < n; ++i) {
        float d = a[i] - b[i];
        tail += d * d;
    }
    return hsum256(acc) + tail;
}

void scale_avx2(float* a, std::size_t n, float s) {
    __m256 vs = _mm256_set1_ps(s);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(a + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), vs));
    }
    for (; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops ops{dot_avx2, squared_l2_avx2, scale_avx2, "avx2"};
    return &ops;
}

}  // namespace mira::kernels

#else

namespace mira::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace mira::kernels

#endif
