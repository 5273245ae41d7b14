#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "mlab/rng.hpp"

namespace mlab {

// Uniform time grid t0 + k*dt, k = 0..n_steps.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 0.0;
    std::size_t n_steps = 0;

    TimeGrid() = default;
    TimeGrid(double t0_, double dt_, std::size_t n_steps_) : t0(t0_), dt(dt_), n_steps(n_steps_) {
        validate();
    }

    void validate() const;
    std::size_t n_nodes() const { return n_steps + 1; }
    double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    double horizon() const { return time(n_steps); }

    // nearest node to t; throws if t is not on the grid within tol*dt
    std::size_t node_at(double t, double tol = 1e-9) const;
};

// State values at the nodes of a TimeGrid.  Stopped paths carry an explicit
// stop index (values at later nodes are frozen, never NaN-padded).
class SamplePath {
public:
    SamplePath() = default;
    SamplePath(TimeGrid grid, std::size_t dim)
        : grid_(grid), dim_(dim), values_(grid.n_nodes() * dim, 0.0) {
        if (dim == 0) throw std::invalid_argument("SamplePath: dim must be >= 1");
    }

    const TimeGrid& grid() const { return grid_; }
    std::size_t dim() const { return dim_; }
    std::size_t n_nodes() const { return grid_.n_nodes(); }

    double& at(std::size_t node, std::size_t coord = 0) { return values_[node * dim_ + coord]; }
    double at(std::size_t node, std::size_t coord = 0) const { return values_[node * dim_ + coord]; }

    std::span<double> node(std::size_t k) { return {values_.data() + k * dim_, dim_}; }
    std::span<const double> node(std::size_t k) const { return {values_.data() + k * dim_, dim_}; }

    // scalar view of a 1-d path
    std::span<const double> scalar_values() const {
        if (dim_ != 1) throw std::logic_error("SamplePath: scalar view of multi-d path");
        return values_;
    }
    std::span<double> scalar_values() {
        if (dim_ != 1) throw std::logic_error("SamplePath: scalar view of multi-d path");
        return values_;
    }

    std::span<const double> raw() const { return values_; }

    void set_stop_index(std::size_t k) { stop_index_ = k; }
    const std::optional<std::size_t>& stop_index() const { return stop_index_; }

    bool all_finite() const;

    // CSV dump: header t,x0,...,x{d-1}, one row per node, 17 significant digits
    void to_csv(std::ostream& os) const;

private:
    TimeGrid grid_;
    std::size_t dim_ = 1;
    std::vector<double> values_;
    std::optional<std::size_t> stop_index_;
};

// Brownian path started at 0 with independent N(0, dt) increments per
// coordinate.
SamplePath simulate_brownian(const TimeGrid& grid, std::size_t dim, RandomSource& rng);

// Generalized inverse of a strictly increasing scalar path, sampled on a
// uniform grid over its range.  Throws MonotoneError on non-monotone input.
class MonotoneError : public std::runtime_error {
public:
    MonotoneError(const std::string& what, std::size_t index)
        : std::runtime_error(what), violation_index(index) {}
    std::size_t violation_index;
};

SamplePath invert_increasing(const SamplePath& path);

// Linear interpolation of a scalar path at time t (clamped to the grid span).
double interpolate_scalar(const SamplePath& path, double t);

}  // namespace mlab
