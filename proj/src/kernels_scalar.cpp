#include "mira/kernels.hpp"

namespace mira::kernels {

namespace {

float dot_scalar(const float* a, const float* b, std::size_t n) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

float squared_l2_scalar(const float* a, const float* b, std::size_t n) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) {
        float d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void scale_scalar(float* a, std::size_t n, float s) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{dot_scalar, squared_l2_scalar, scale_scalar, "scalar"};
    return ops;
}

}  // namespace mira::kernels
