// AVX2 kernel variants.  This translation unit is compiled with -mavx2 -mfma;
// nothing here may be called unless the CPU reports AVX2 at runtime.

#include "mlab/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace mlab::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sq_sum_avx2(const double* x, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d a = _mm256_loadu_pd(x + i);
        const __m256d b = _mm256_loadu_pd(x + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double weighted_sq_sum_avx2(const double* w, const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d wv = _mm256_loadu_pd(w + i);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(wv, xv), xv, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * x[i] * x[i];
    return s;
}

double increment_sq_sum_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t m = n - 1;
    for (; i + 4 <= m; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < m; ++i) {
        const double d = x[i + 1] - x[i];
        s += d * d;
    }
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

void scale_complex_avx2(double* xy, const double* f, std::size_t n_pairs) {
    std::size_t j = 0;
    for (; j + 2 <= n_pairs; j += 2) {
        // duplicate each factor over its (re,im) pair
        const __m128d fp = _mm_loadu_pd(f + j);
        const __m256d fd = _mm256_permute4x64_pd(_mm256_castpd128_pd256(fp), 0b01010000);
        _mm256_storeu_pd(xy + 2 * j, _mm256_mul_pd(fd, _mm256_loadu_pd(xy + 2 * j)));
    }
    for (; j < n_pairs; ++j) {
        xy[2 * j] *= f[j];
        xy[2 * j + 1] *= f[j];
    }
}

double weighted_norm_sq_complex_avx2(const double* xy, const double* w, std::size_t n_pairs) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 2 <= n_pairs; j += 2) {
        const __m128d wp = _mm_loadu_pd(w + j);
        const __m256d wd = _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0b01010000);
        const __m256d v = _mm256_loadu_pd(xy + 2 * j);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(wd, v), v, acc);
    }
    double s = hsum(acc);
    for (; j < n_pairs; ++j) {
        const double re = xy[2 * j];
        const double im = xy[2 * j + 1];
        s += w[j] * (re * re + im * im);
    }
    return s;
}

}  // namespace

const KernelTable* avx2_table() {
    static const KernelTable table{
        "avx2",
        sum_avx2,
        dot_avx2,
        sq_sum_avx2,
        weighted_sq_sum_avx2,
        increment_sq_sum_avx2,
        axpy_avx2,
        scale_avx2,
        scale_complex_avx2,
        weighted_norm_sq_complex_avx2,
    };
    return &table;
}

}  // namespace mlab::kernels

#else

namespace mlab::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace mlab::kernels

#endif
