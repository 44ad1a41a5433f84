#include "uopt/kernels.hpp"

namespace uopt::kernels {
namespace {

std::size_t first_comparable(const double* a, const double* b, std::size_t n, double x, double y) {
    for (std::size_t i = 0; i < n; ++i) {
        if ((a[i] <= x && b[i] <= y) || (x <= a[i] && y <= b[i])) return i;
    }
    return n;
}

void dominated_mask(const double* a, const double* b, std::size_t n, double x, double y, std::uint8_t* mask) {
    for (std::size_t i = 0; i < n; ++i) {
        const bool le = x <= a[i] && y <= b[i];
        const bool lt = x < a[i] || y < b[i];
        mask[i] = static_cast<std::uint8_t>(le && lt);
    }
}

void eval_f2(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double u = x[i] * x[i] + y[i] - 11.0;
        const double v = x[i] + y[i] * y[i] - 7.0;
        out[i] = (u * u + v * v) / 100.0;
    }
}

std::size_t argmin_first(const double* v, std::size_t n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", first_comparable, dominated_mask, eval_f2, argmin_first};
    return table;
}

}  // namespace uopt::kernels
