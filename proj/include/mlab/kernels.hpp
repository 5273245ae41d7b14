#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace mlab::kernels {

// Data-parallel inner loops shared by the path/ensemble and spectral code.
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant; the active variant is chosen once at startup.  Reductions in the
// SIMD variants reassociate, so results may differ from the scalar reference
// by a few ulps (equivalence-tested to 1e-13 relative).
struct KernelTable {
    const char* name;
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*sq_sum)(const double*, std::size_t);
    double (*weighted_sq_sum)(const double*, const double*, std::size_t);
    // sum over i < n-1 of (x[i+1] - x[i])^2; 0 for n < 2
    double (*increment_sq_sum)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double*, double, std::size_t);
    // xy = n_pairs (re,im) pairs, one real factor per pair
    void (*scale_complex)(double*, const double*, std::size_t);
    // sum over pairs of w[j] * (re^2 + im^2)
    double (*weighted_norm_sq_complex)(const double*, const double*, std::size_t);
};

const KernelTable& scalar_table();
// nullptr when the CPU (or build) has no AVX2 support
const KernelTable* avx2_table();

// Active table.  Default: AVX2 when available, else scalar; the environment
// variable MLAB_KERNELS=scalar|avx2 overrides at startup.
const KernelTable& active();
bool set_backend(std::string_view name);
std::string_view active_backend();

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double dot(std::span<const double> x, std::span<const double> y) {
    return active().dot(x.data(), y.data(), x.size());
}
inline double sq_sum(std::span<const double> x) { return active().sq_sum(x.data(), x.size()); }
inline double weighted_sq_sum(std::span<const double> w, std::span<const double> x) {
    return active().weighted_sq_sum(w.data(), x.data(), x.size());
}
inline double increment_sq_sum(std::span<const double> x) {
    return active().increment_sq_sum(x.data(), x.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
    active().axpy(a, x.data(), y.data(), x.size());
}
inline void scale(std::span<double> x, double a) { active().scale(x.data(), a, x.size()); }
inline void scale_complex(std::span<double> xy, std::span<const double> f) {
    active().scale_complex(xy.data(), f.data(), f.size());
}
inline double weighted_norm_sq_complex(std::span<const double> xy, std::span<const double> w) {
    return active().weighted_norm_sq_complex(xy.data(), w.data(), w.size());
}

// trapezoid rule on uniformly spaced nodes: dt * (sum(f) - (f[0]+f[n-1])/2)
double trapezoid(std::span<const double> f, double dt);

}  // namespace mlab::kernels
