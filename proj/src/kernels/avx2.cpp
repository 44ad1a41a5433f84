// Compiled with -mavx2 only (no -mfma), so every lane performs the same
// rounding steps as the scalar loop.

#include <immintrin.h>

#include "uopt/kernels.hpp"

namespace uopt::kernels {
namespace {

std::size_t first_comparable(const double* a, const double* b, std::size_t n, double x, double y) {
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vy = _mm256_set1_pd(y);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d below = _mm256_and_pd(_mm256_cmp_pd(va, vx, _CMP_LE_OQ), _mm256_cmp_pd(vb, vy, _CMP_LE_OQ));
        const __m256d above = _mm256_and_pd(_mm256_cmp_pd(vx, va, _CMP_LE_OQ), _mm256_cmp_pd(vy, vb, _CMP_LE_OQ));
        const int bits = _mm256_movemask_pd(_mm256_or_pd(below, above));
        if (bits != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(bits)));
    }
    for (; i < n; ++i) {
        if ((a[i] <= x && b[i] <= y) || (x <= a[i] && y <= b[i])) return i;
    }
    return n;
}

void dominated_mask(const double* a, const double* b, std::size_t n, double x, double y, std::uint8_t* mask) {
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vy = _mm256_set1_pd(y);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d le = _mm256_and_pd(_mm256_cmp_pd(vx, va, _CMP_LE_OQ), _mm256_cmp_pd(vy, vb, _CMP_LE_OQ));
        const __m256d lt = _mm256_or_pd(_mm256_cmp_pd(vx, va, _CMP_LT_OQ), _mm256_cmp_pd(vy, vb, _CMP_LT_OQ));
        const int bits = _mm256_movemask_pd(_mm256_and_pd(le, lt));
        for (int k = 0; k < 4; ++k) mask[i + static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((bits >> k) & 1);
    }
    for (; i < n; ++i) {
        const bool le = x <= a[i] && y <= b[i];
        const bool lt = x < a[i] || y < b[i];
        mask[i] = static_cast<std::uint8_t>(le && lt);
    }
}

void eval_f2(const double* x, const double* y, double* out, std::size_t n) {
    const __m256d c11 = _mm256_set1_pd(11.0);
    const __m256d c7 = _mm256_set1_pd(7.0);
    const __m256d c100 = _mm256_set1_pd(100.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d u = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(vx, vx), vy), c11);
        const __m256d v = _mm256_sub_pd(_mm256_add_pd(vx, _mm256_mul_pd(vy, vy)), c7);
        const __m256d s = _mm256_add_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(v, v));
        _mm256_storeu_pd(out + i, _mm256_div_pd(s, c100));
    }
    for (; i < n; ++i) {
        const double u = x[i] * x[i] + y[i] - 11.0;
        const double v = x[i] + y[i] * y[i] - 7.0;
        out[i] = (u * u + v * v) / 100.0;
    }
}

std::size_t argmin_first(const double* v, std::size_t n) {
    if (n < 8) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (v[i] < v[best]) best = i;
        return best;
    }
    __m256d m = _mm256_loadu_pd(v);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) m = _mm256_min_pd(m, _mm256_loadu_pd(v + i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double lo = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] < lo) lo = lanes[k];
    for (; i < n; ++i)
        if (v[i] < lo) lo = v[i];
    // The first index holding the minimum, matching the scalar scan.
    for (std::size_t j = 0; j < n; ++j)
        if (v[j] == lo) return j;
    return 0;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", first_comparable, dominated_mask, eval_f2, argmin_first};
    return &table;
}

}  // namespace uopt::kernels
