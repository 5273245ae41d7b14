#include "mlab/observables.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace mlab {
namespace {

// flat_cos: identically 1 on |x| <= 0.25, equal to cos(x) on |x| >= 0.5,
// C^2 blend in between.  Useful where a test function must have a flat
// neighborhood of 0.
constexpr double kFlatA = 0.25;
constexpr double kFlatB = 0.5;

double flat_cos(double x) {
    const double ax = std::abs(x);
    if (ax <= kFlatA) return 1.0;
    const double tau = std::min((ax - kFlatA) / (kFlatB - kFlatA), 1.0);
    return 1.0 - smoothstep5(tau) * (1.0 - std::cos(x));
}

double flat_cos_d1(double x) {
    const double ax = std::abs(x);
    if (ax <= kFlatA) return 0.0;
    const double w = kFlatB - kFlatA;
    const double tau = std::min((ax - kFlatA) / w, 1.0);
    const double sgn = x < 0.0 ? -1.0 : 1.0;
    const double g = smoothstep5(tau);
    const double gp = (tau < 1.0 ? smoothstep5_d1(tau) / w : 0.0) * sgn;
    const double h = 1.0 - std::cos(x);
    const double hp = std::sin(x);
    return -(gp * h + g * hp);
}

double flat_cos_d2(double x) {
    const double ax = std::abs(x);
    if (ax <= kFlatA) return 0.0;
    const double w = kFlatB - kFlatA;
    const double tau = std::min((ax - kFlatA) / w, 1.0);
    const double sgn = x < 0.0 ? -1.0 : 1.0;
    const double g = smoothstep5(tau);
    const double gp = (tau < 1.0 ? smoothstep5_d1(tau) / w : 0.0) * sgn;
    const double gpp = tau < 1.0 ? smoothstep5_d2(tau) / (w * w) : 0.0;  // sgn^2 = 1
    const double h = 1.0 - std::cos(x);
    const double hp = std::sin(x);
    const double hpp = std::cos(x);
    return -(gpp * h + 2.0 * gp * hp + g * hpp);
}

const std::map<std::string, Observable1D, std::less<>>& obs_registry() {
    static const std::map<std::string, Observable1D, std::less<>> reg = [] {
        std::map<std::string, Observable1D, std::less<>> m;
        m.emplace("one", Observable1D{"one", [](double) { return 1.0; }, 1.0});
        m.emplace("x", Observable1D{"x", [](double x) { return x; }, 8.0});
        m.emplace("x2", Observable1D{"x2", [](double x) { return x * x; }, 64.0});
        m.emplace("cosx", Observable1D{"cosx", [](double x) { return std::cos(x); }, 1.0});
        m.emplace("flat_cos", Observable1D{"flat_cos", flat_cos, 1.0});
        m.emplace("absx", Observable1D{"absx", [](double x) { return std::abs(x); }, 8.0});
        return m;
    }();
    return reg;
}

const std::map<std::string, C2Function, std::less<>>& c2_registry() {
    static const std::map<std::string, C2Function, std::less<>> reg = [] {
        std::map<std::string, C2Function, std::less<>> m;
        m.emplace("x2", C2Function{"x2", [](double x) { return x * x; },
                                   [](double x) { return 2.0 * x; }, [](double) { return 2.0; },
                                   0.0, 0.0});
        m.emplace("absx", C2Function{"absx", [](double x) { return std::abs(x); },
                                     [](double x) { return x < 0.0 ? -1.0 : 1.0; },
                                     [](double) { return 0.0; }, 1.0, -1.0});
        m.emplace("cosx", C2Function{"cosx", [](double x) { return std::cos(x); },
                                     [](double x) { return -std::sin(x); },
                                     [](double x) { return -std::cos(x); }, 0.0, 0.0});
        m.emplace("flat_cos", C2Function{"flat_cos", flat_cos, flat_cos_d1, flat_cos_d2, 0.0, 0.0});
        return m;
    }();
    return reg;
}

}  // namespace

double smoothstep5(double tau) {
    if (tau <= 0.0) return 0.0;
    if (tau >= 1.0) return 1.0;
    return tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau));
}

double smoothstep5_d1(double tau) {
    if (tau <= 0.0 || tau >= 1.0) return 0.0;
    return 30.0 * tau * tau * (1.0 - tau) * (1.0 - tau);
}

double smoothstep5_d2(double tau) {
    if (tau <= 0.0 || tau >= 1.0) return 0.0;
    return 60.0 * tau * (1.0 - tau) * (1.0 - 2.0 * tau);
}

const Observable1D& observable(std::string_view name) {
    const auto& reg = obs_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown observable: " + std::string(name));
    return it->second;
}

std::vector<std::string> observable_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : obs_registry()) names.push_back(k);
    return names;
}

const C2Function& c2_function(std::string_view name) {
    const auto& reg = c2_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown C2 function: " + std::string(name));
    return it->second;
}

std::vector<std::string> c2_function_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : c2_registry()) names.push_back(k);
    return names;
}

}  // namespace mlab
