#include "mira/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mira::kernels {

const Ops* avx2_ops();  // defined in kernels_avx2.cpp, nullptr off x86

namespace {

const Ops& pick() {
    const char* force = std::getenv("MIRA_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0) return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        if (const Ops* ops = avx2_ops()) return *ops;
    }
#endif
    return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    static const Ops& ops = pick();
    return ops;
}

}  // namespace mira::kernels
