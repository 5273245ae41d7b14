#include "mlab/path.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace mlab {

void TimeGrid::validate() const {
    if (!(t0 >= 0.0) || !std::isfinite(t0)) throw std::invalid_argument("TimeGrid: t0 must be finite and >= 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("TimeGrid: dt must be positive");
    if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
    if (!std::isfinite(horizon())) throw std::invalid_argument("TimeGrid: horizon overflows");
}

std::size_t TimeGrid::node_at(double t, double tol) const {
    const double k = (t - t0) / dt;
    const double r = std::round(k);
    if (std::abs(k - r) > tol || r < 0.0 || r > static_cast<double>(n_steps)) {
        std::ostringstream msg;
        msg << "TimeGrid: t=" << t << " is not a grid node (t0=" << t0 << ", dt=" << dt << ")";
        throw std::invalid_argument(msg.str());
    }
    return static_cast<std::size_t>(r);
}

bool SamplePath::all_finite() const {
    const std::size_t last = stop_index_ ? *stop_index_ : n_nodes() - 1;
    for (std::size_t k = 0; k <= last; ++k)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!std::isfinite(at(k, j))) return false;
    return true;
}

void SamplePath::to_csv(std::ostream& os) const {
    os << "t";
    for (std::size_t j = 0; j < dim_; ++j) os << ",x" << j;
    os << "\n";
    os << std::setprecision(17);
    for (std::size_t k = 0; k < n_nodes(); ++k) {
        os << grid_.time(k);
        for (std::size_t j = 0; j < dim_; ++j) os << "," << at(k, j);
        os << "\n";
    }
}

SamplePath simulate_brownian(const TimeGrid& grid, std::size_t dim, RandomSource& rng) {
    grid.validate();
    SamplePath path(grid, dim);
    const double s = std::sqrt(grid.dt);
    for (std::size_t k = 1; k < grid.n_nodes(); ++k)
        for (std::size_t j = 0; j < dim; ++j)
            path.at(k, j) = path.at(k - 1, j) + s * rng.next_gaussian();
    return path;
}

SamplePath invert_increasing(const SamplePath& path) {
    if (path.dim() != 1) throw std::invalid_argument("invert_increasing: path must be scalar");
    const auto v = path.scalar_values();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (!(v[i + 1] > v[i])) {
            std::ostringstream msg;
            msg << "invert_increasing: not strictly increasing at node " << i + 1 << " (" << v[i]
                << " -> " << v[i + 1] << ")";
            throw MonotoneError(msg.str(), i + 1);
        }
    }
    const std::size_t n = path.grid().n_steps;
    const double lo = v.front();
    const double hi = v.back();
    const TimeGrid out_grid(lo, (hi - lo) / static_cast<double>(n), n);
    SamplePath inv(out_grid, 1);
    std::size_t seg = 0;
    for (std::size_t j = 0; j < inv.n_nodes(); ++j) {
        const double s = (j == inv.n_nodes() - 1) ? hi : out_grid.time(j);
        while (seg + 2 < v.size() && v[seg + 1] < s) ++seg;
        const double frac = (s - v[seg]) / (v[seg + 1] - v[seg]);
        inv.at(j) = path.grid().time(seg) + frac * path.grid().dt;
    }
    return inv;
}

double interpolate_scalar(const SamplePath& path, double t) {
    const auto& g = path.grid();
    if (t <= g.t0) return path.at(0);
    if (t >= g.horizon()) return path.at(g.n_steps);
    const double k = (t - g.t0) / g.dt;
    const std::size_t i = static_cast<std::size_t>(k);
    const double frac = k - static_cast<double>(i);
    return path.at(i) + frac * (path.at(i + 1) - path.at(i));
}

}  // namespace mlab
