#include "mlab/kernels.hpp"

#include <cmath>

namespace mlab::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sq_sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double weighted_sq_sum_scalar(const double* w, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * x[i];
    return s;
}

double increment_sq_sum_scalar(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i + 1] - x[i];
        s += d * d;
    }
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    // fma keeps elementwise results bit-identical to the SIMD variants
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_scalar(double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void scale_complex_scalar(double* xy, const double* f, std::size_t n_pairs) {
    for (std::size_t j = 0; j < n_pairs; ++j) {
        xy[2 * j] *= f[j];
        xy[2 * j + 1] *= f[j];
    }
}

double weighted_norm_sq_complex_scalar(const double* xy, const double* w, std::size_t n_pairs) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_pairs; ++j) {
        const double re = xy[2 * j];
        const double im = xy[2 * j + 1];
        s += w[j] * (re * re + im * im);
    }
    return s;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{
        "scalar",
        sum_scalar,
        dot_scalar,
        sq_sum_scalar,
        weighted_sq_sum_scalar,
        increment_sq_sum_scalar,
        axpy_scalar,
        scale_scalar,
        scale_complex_scalar,
        weighted_norm_sq_complex_scalar,
    };
    return table;
}

double trapezoid(std::span<const double> f, double dt) {
    if (f.empty()) return 0.0;
    if (f.size() == 1) return 0.0;
    const double s = active().sum(f.data(), f.size());
    return dt * (s - 0.5 * (f.front() + f.back()));
}

}  // namespace mlab::kernels
