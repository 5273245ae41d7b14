#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlab/path.hpp"

namespace mlab {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, std::size_t node)
        : std::runtime_error(what), node_index(node) {}
    std::size_t node_index;
};

// Trapezoidal approximation of the time integral of integrand(state) along a
// path.  Non-finite integrand values are reported with the offending node.
double path_quadrature(const SamplePath& path,
                       const std::function<double(std::span<const double>)>& integrand);

// Scalar-path convenience overload.
double path_quadrature(const SamplePath& path, const std::function<double(double)>& integrand);

// Trapezoid over precomputed node values on a uniform grid.
double trapezoid_nodes(std::span<const double> values, double dt);

// Gauss-Legendre nodes/weights on [-1, 1]; computed once per order and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
double integrate(const std::function<double(double)>& f, double a, double b, int panels = 16,
                 int order = 32);

// Integral of |f - g| over [a, b].  Sign changes of f-g are located by a scan
// plus bisection and the panels are split there, so the kinks of |.| never sit
// inside a panel.
double integrate_abs_diff(const std::function<double(double)>& f,
                          const std::function<double(double)>& g, double a, double b,
                          int scan_points = 512, int panels = 8, int order = 32);

}  // namespace mlab
