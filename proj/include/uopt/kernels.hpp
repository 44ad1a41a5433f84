#pragma once

// Data-parallel loops of the benchmark, as a table of function pointers with
// a scalar reference and an AVX2 variant. Both variants return bit-identical
// results; the library is built without FP contraction to keep it that way.
//
// Points are stored as two parallel coordinate arrays (a[i], b[i]).

#include <cstddef>
#include <cstdint>

namespace uopt::kernels {

struct KernelTable {
    const char* name;

    /// First i in [0, n) with (a[i], b[i]) weakly comparable to (x, y):
    /// a[i] <= x && b[i] <= y, or x <= a[i] && y <= b[i]. Returns n if none.
    std::size_t (*first_comparable)(const double* a, const double* b, std::size_t n, double x, double y);

    /// mask[i] = 1 iff (x, y) strictly dominates (a[i], b[i]), else 0.
    void (*dominated_mask)(const double* a, const double* b, std::size_t n, double x, double y, std::uint8_t* mask);

    /// out[i] = ((x² + y - 11)² + (x + y² - 7)²) / 100.
    void (*eval_f2)(const double* x, const double* y, double* out, std::size_t n);

    /// Index of the first minimal element; 0 if n == 0. Inputs must not be NaN.
    std::size_t (*argmin_first)(const double* v, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Null when the build has no AVX2 variant.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

/// AVX2 when the CPU supports it, unless the environment variable
/// UOPT_SIMD is set to "scalar". Chosen once per process.
const KernelTable& active_kernels();

}  // namespace uopt::kernels
