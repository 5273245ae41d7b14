#include "mlab/rng.hpp"

#include <cmath>

namespace mlab {

double RandomSource::log_open_unit() { return std::log(next_open_unit()); }

double RandomSource::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; the pair shares one radius draw.
    const double u1 = next_open_unit();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

}  // namespace mlab
