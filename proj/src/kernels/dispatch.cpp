#include <cstdlib>
#include <string_view>

#include "uso/kernels.hpp"

namespace uso::kernels {

// Defined in avx2.cpp; nullptr when that TU was built without AVX2 support.
const Ops* avx2_ops_compiled();

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return avx2_ops_compiled();
    }
#endif
    return nullptr;
}

const Ops& active() {
    static const Ops& chosen = []() -> const Ops& {
        const char* force = std::getenv("USO_KERNELS");
        if (force != nullptr && std::string_view{force} == "scalar") return scalar_ops();
        if (const Ops* v = avx2_ops()) return *v;
        return scalar_ops();
    }();
    return chosen;
}

}  // namespace uso::kernels
