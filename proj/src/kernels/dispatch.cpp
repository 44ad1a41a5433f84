#include <cstdlib>
#include <string_view>

#include "uopt/kernels.hpp"

namespace uopt::kernels {

#ifndef UOPT_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {
const KernelTable& select() {
    const char* env = std::getenv("UOPT_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels(); t != nullptr && cpu_has_avx2()) return *t;
    return scalar_kernels();
}
}  // namespace

const KernelTable& active_kernels() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace uopt::kernels
