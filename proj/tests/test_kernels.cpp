#include "catch_amalgamated.hpp"

#include <cstdlib>
#include <cstring>
#include <string_view>
#include <vector>

#include "uopt/kernels.hpp"
#include "uopt/proptest.hpp"

using namespace uopt;
using namespace uopt::kernels;

namespace {

// Coarse values so that ties and equal coordinates are common.
std::vector<double> coarse(Rng& r, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(r.uniform_int(-4, 4)) / 2.0;
    return v;
}

std::vector<double> fine(Rng& r, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = r.uniform(-5.0, 5.0);
    return v;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar reference semantics") {
    const auto& k = scalar_kernels();
    const std::vector<double> a{0.0, 2.0, 1.0, 1.0};
    const std::vector<double> b{3.0, 0.0, 1.0, 0.5};
    CHECK(k.first_comparable(a.data(), b.data(), 4, 1.0, 1.0) == 2);
    CHECK(k.first_comparable(a.data(), b.data(), 4, -1.0, 5.0) == 4);
    CHECK(k.first_comparable(a.data(), b.data(), 0, 1.0, 1.0) == 0);
    std::vector<std::uint8_t> mask(4);
    k.dominated_mask(a.data(), b.data(), 4, 1.0, 0.5, mask.data());
    CHECK(mask == std::vector<std::uint8_t>{0, 0, 1, 0});
    const std::vector<double> x{3.0}, y{2.0};
    double out = -1;
    k.eval_f2(x.data(), y.data(), &out, 1);
    CHECK(out == 0.0);
    const std::vector<double> v{3.0, 1.0, 2.0, 1.0};
    CHECK(k.argmin_first(v.data(), v.size()) == 1);
    CHECK(k.argmin_first(v.data(), 0) == 0);
}

TEST_CASE("avx2 kernels match the scalar reference bit for bit") {
    const KernelTable* avx = avx2_kernels();
    if (avx == nullptr || !cpu_has_avx2()) SKIP("no AVX2 on this machine or build");
    const auto& sc = scalar_kernels();
    Rng r(1234);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = static_cast<std::size_t>(r.uniform_int(0, 37));
        const bool ties = t % 2 == 0;
        const auto a = ties ? coarse(r, n) : fine(r, n);
        const auto b = ties ? coarse(r, n) : fine(r, n);
        const double x = ties ? static_cast<double>(r.uniform_int(-4, 4)) / 2.0 : r.uniform(-5.0, 5.0);
        const double y = ties ? static_cast<double>(r.uniform_int(-4, 4)) / 2.0 : r.uniform(-5.0, 5.0);

        REQUIRE(avx->first_comparable(a.data(), b.data(), n, x, y) == sc.first_comparable(a.data(), b.data(), n, x, y));

        std::vector<std::uint8_t> m1(n), m2(n);
        avx->dominated_mask(a.data(), b.data(), n, x, y, m1.data());
        sc.dominated_mask(a.data(), b.data(), n, x, y, m2.data());
        REQUIRE(m1 == m2);

        const auto xs = fine(r, n), ys = fine(r, n);
        std::vector<double> o1(n), o2(n);
        avx->eval_f2(xs.data(), ys.data(), o1.data(), n);
        sc.eval_f2(xs.data(), ys.data(), o2.data(), n);
        REQUIRE(bit_equal(o1, o2));

        REQUIRE(avx->argmin_first(a.data(), n) == sc.argmin_first(a.data(), n));
        REQUIRE(avx->argmin_first(o1.data(), n) == sc.argmin_first(o1.data(), n));
    }
}

TEST_CASE("argmin returns the first of tied minima in every lane position") {
    const KernelTable* avx = avx2_kernels();
    for (std::size_t n = 1; n <= 19; ++n)
        for (std::size_t first = 0; first < n; ++first) {
            std::vector<double> v(n, 5.0);
            for (std::size_t j = first; j < n; j += 3) v[j] = -1.0;
            REQUIRE(scalar_kernels().argmin_first(v.data(), n) == first);
            if (avx != nullptr && cpu_has_avx2()) REQUIRE(avx->argmin_first(v.data(), n) == first);
        }
}

TEST_CASE("dispatch honours UOPT_SIMD") {
    const char* env = std::getenv("UOPT_SIMD");
    const std::string_view active = active_kernels().name;
    if (env != nullptr && std::string_view(env) == "scalar") {
        CHECK(active == "scalar");
    } else if (avx2_kernels() != nullptr && cpu_has_avx2()) {
        CHECK(active == "avx2");
    } else {
        CHECK(active == "scalar");
    }
}
