#include "mlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "mlab/kernels.hpp"

namespace mlab {
namespace {

std::vector<double> eval_nodes(const SamplePath& path,
                               const std::function<double(std::span<const double>)>& integrand) {
    std::vector<double> f(path.n_nodes());
    for (std::size_t k = 0; k < path.n_nodes(); ++k) {
        f[k] = integrand(path.node(k));
        if (!std::isfinite(f[k])) {
            std::ostringstream msg;
            msg << "path_quadrature: non-finite integrand at node " << k << " (t="
                << path.grid().time(k) << ")";
            throw QuadratureError(msg.str(), k);
        }
    }
    return f;
}

}  // namespace

double path_quadrature(const SamplePath& path,
                       const std::function<double(std::span<const double>)>& integrand) {
    const auto f = eval_nodes(path, integrand);
    return kernels::trapezoid(f, path.grid().dt);
}

double path_quadrature(const SamplePath& path, const std::function<double(double)>& integrand) {
    return path_quadrature(path, [&](std::span<const double> x) { return integrand(x[0]); });
}

double trapezoid_nodes(std::span<const double> values, double dt) {
    return kernels::trapezoid(values, dt);
}

const GaussRule& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    // Newton iteration on P_n from the Chebyshev initial guess.
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int n = order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int order) {
    if (!(b > a)) return 0.0;
    const GaussRule& rule = gauss_legendre(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        total += 0.5 * h * s;
    }
    return total;
}

double integrate_abs_diff(const std::function<double(double)>& f,
                          const std::function<double(double)>& g, double a, double b,
                          int scan_points, int panels, int order) {
    auto d = [&](double y) { return f(y) - g(y); };
    std::vector<double> cuts{a};
    double prev_y = a;
    double prev_v = d(a);
    for (int i = 1; i <= scan_points; ++i) {
        const double y = a + (b - a) * i / scan_points;
        const double v = d(y);
        if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
            double lo = prev_y, hi = y, vlo = prev_v;
            for (int it = 0; it < 80; ++it) {
                const double m = 0.5 * (lo + hi);
                const double vm = d(m);
                if ((vlo < 0.0) == (vm < 0.0)) {
                    lo = m;
                    vlo = vm;
                } else {
                    hi = m;
                }
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        prev_y = y;
        prev_v = v;
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] < 1e-300) continue;
        total += std::abs(integrate(d, cuts[i], cuts[i + 1], panels, order));
    }
    return total;
}

}  // namespace mlab
