#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace mlab {

// Histogram on strictly increasing edges; samples outside land in the
// under/overflow buckets so no mass is lost.
struct Histogram {
    std::vector<double> edges;
    std::vector<double> counts;  // edges.size() - 1 bins
    double underflow = 0.0;
    double overflow = 0.0;

    double total() const;
};

// Multiset of scalar samples, optionally carrying a cached histogram.
class EmpiricalLaw {
public:
    EmpiricalLaw() = default;
    explicit EmpiricalLaw(std::vector<double> samples) : samples_(std::move(samples)) {}

    const std::vector<double>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    void add(double x) { samples_.push_back(x); }

    Histogram histogram(std::span<const double> edges) const;
    void attach_histogram(std::span<const double> edges) { hist_ = histogram(edges); }
    const std::optional<Histogram>& attached() const { return hist_; }

    double mean() const;
    double fraction_in(double lo, double hi) const;

private:
    std::vector<double> samples_;
    std::optional<Histogram> hist_;
};

std::vector<double> linspace_edges(double lo, double hi, std::size_t bins);

// (1/2) sum |p_i - q_i| over shared bins (plus under/overflow buckets).
double tv_distance(const EmpiricalLaw& a, const EmpiricalLaw& b, std::span<const double> edges);
double tv_distance(const Histogram& a, const Histogram& b);

}  // namespace mlab
