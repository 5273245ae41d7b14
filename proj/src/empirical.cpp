#include "mlab/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "mlab/kernels.hpp"

namespace mlab {

double Histogram::total() const {
    return underflow + overflow + kernels::sum(counts);
}

Histogram EmpiricalLaw::histogram(std::span<const double> edges) const {
    if (edges.size() < 2) throw std::invalid_argument("histogram: need at least 2 edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i + 1] > edges[i]))
            throw std::invalid_argument("histogram: edges must be strictly increasing");
    Histogram h;
    h.edges.assign(edges.begin(), edges.end());
    h.counts.assign(edges.size() - 1, 0.0);
    for (double x : samples_) {
        if (x < edges.front()) {
            h.underflow += 1.0;
        } else if (x >= edges.back()) {
            h.overflow += 1.0;
        } else {
            const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
            h.counts[static_cast<std::size_t>(it - h.edges.begin()) - 1] += 1.0;
        }
    }
    return h;
}

double EmpiricalLaw::mean() const {
    if (samples_.empty()) return 0.0;
    return kernels::sum(samples_) / static_cast<double>(samples_.size());
}

double EmpiricalLaw::fraction_in(double lo, double hi) const {
    if (samples_.empty()) return 0.0;
    std::size_t c = 0;
    for (double x : samples_)
        if (x >= lo && x <= hi) ++c;
    return static_cast<double>(c) / static_cast<double>(samples_.size());
}

std::vector<double> linspace_edges(double lo, double hi, std::size_t bins) {
    std::vector<double> e(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    return e;
}

double tv_distance(const Histogram& a, const Histogram& b) {
    if (a.edges != b.edges) throw std::invalid_argument("tv_distance: mismatched histogram edges");
    const double na = a.total();
    const double nb = b.total();
    if (na <= 0.0 || nb <= 0.0) throw std::invalid_argument("tv_distance: empty law");
    double s = std::abs(a.underflow / na - b.underflow / nb) +
               std::abs(a.overflow / na - b.overflow / nb);
    for (std::size_t i = 0; i < a.counts.size(); ++i)
        s += std::abs(a.counts[i] / na - b.counts[i] / nb);
    return 0.5 * s;
}

double tv_distance(const EmpiricalLaw& a, const EmpiricalLaw& b, std::span<const double> edges) {
    return tv_distance(a.histogram(edges), b.histogram(edges));
}

}  // namespace mlab
