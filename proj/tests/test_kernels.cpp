#include <doctest.h>

#include <cmath>
#include <vector>

#include "mlab/kernels.hpp"
#include "mlab/rng.hpp"

using namespace mlab;

namespace {

std::vector<double> random_array(std::size_t n, RandomSource& rng, double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * rng.next_gaussian();
    return v;
}

// sizes exercising the vector body and ragged tails
const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 64, 100, 1001};

}  // namespace

TEST_CASE("scalar and simd kernel variants agree") {
    const kernels::KernelTable& ref = kernels::scalar_table();
    const kernels::KernelTable* simd = kernels::avx2_table();
    if (!simd) {
        MESSAGE("no AVX2 variant built; nothing to compare");
        return;
    }
    RandomSource rng(2024, 7);
    for (std::size_t n : kSizes) {
        auto x = random_array(n, rng, 2.0);
        auto y = random_array(n, rng, 0.5);
        auto w = random_array(n, rng);
        for (auto& v : w) v = std::abs(v);

        const double tol = 1e-13 * (1.0 + static_cast<double>(n));
        CHECK(std::abs(ref.sum(x.data(), n) - simd->sum(x.data(), n)) <= tol * 10);
        CHECK(std::abs(ref.dot(x.data(), y.data(), n) - simd->dot(x.data(), y.data(), n)) <= tol * 10);
        CHECK(std::abs(ref.sq_sum(x.data(), n) - simd->sq_sum(x.data(), n)) <=
              tol * (1.0 + ref.sq_sum(x.data(), n)));
        CHECK(std::abs(ref.weighted_sq_sum(w.data(), x.data(), n) -
                       simd->weighted_sq_sum(w.data(), x.data(), n)) <=
              tol * (1.0 + std::abs(ref.weighted_sq_sum(w.data(), x.data(), n))));
        CHECK(std::abs(ref.increment_sq_sum(x.data(), n) - simd->increment_sq_sum(x.data(), n)) <=
              tol * (1.0 + ref.increment_sq_sum(x.data(), n)));

        // elementwise ops must agree exactly
        auto y1 = y, y2 = y;
        ref.axpy(1.7, x.data(), y1.data(), n);
        simd->axpy(1.7, x.data(), y2.data(), n);
        CHECK(y1 == y2);

        auto x1 = x, x2 = x;
        ref.scale(x1.data(), -0.3, n);
        simd->scale(x2.data(), -0.3, n);
        CHECK(x1 == x2);

        if (n % 2 == 0 && n > 0) {
            const std::size_t pairs = n / 2;
            auto f = random_array(pairs, rng);
            auto a1 = x, a2 = x;
            ref.scale_complex(a1.data(), f.data(), pairs);
            simd->scale_complex(a2.data(), f.data(), pairs);
            CHECK(a1 == a2);

            auto wp = random_array(pairs, rng);
            for (auto& v : wp) v = std::abs(v);
            const double r1 = ref.weighted_norm_sq_complex(x.data(), wp.data(), pairs);
            const double r2 = simd->weighted_norm_sq_complex(x.data(), wp.data(), pairs);
            CHECK(std::abs(r1 - r2) <= tol * (1.0 + std::abs(r1)));
        }
    }
}

TEST_CASE("kernel backend selection") {
    const auto original = kernels::active_backend();
    CHECK(kernels::set_backend("scalar"));
    CHECK(kernels::active_backend() == "scalar");
    CHECK_FALSE(kernels::set_backend("no-such-backend"));
    if (kernels::avx2_table()) {
        CHECK(kernels::set_backend("avx2"));
        CHECK(kernels::active_backend() == "avx2");
    }
    kernels::set_backend(original);
}

TEST_CASE("trapezoid rule basics") {
    std::vector<double> ones(11, 1.0);
    CHECK(kernels::trapezoid(ones, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
    // exact on linear nodes
    std::vector<double> lin(11);
    for (int i = 0; i <= 10; ++i) lin[i] = 0.1 * i;
    CHECK(kernels::trapezoid(lin, 0.1) == doctest::Approx(0.5).epsilon(1e-14));
}
