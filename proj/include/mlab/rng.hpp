#pragma once

#include <cstdint>
#include <limits>

namespace mlab {

// Splittable counter-based random source.  A (seed, stream_id) pair fully
// determines the draw sequence, bit for bit; distinct stream_ids give
// statistically independent streams (splitmix64 with a per-stream mixed
// origin).  One stream per trajectory is the concurrency contract used by
// every ensemble in this project.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id), state_(origin(seed, stream_id)) {}

    // Fresh independent stream derived from the same base seed.
    RandomSource stream(std::uint64_t stream_id) const { return RandomSource(seed_, stream_id); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1], safe under log()
    double next_open_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double next_gaussian();

    // rate 0 -> +inf, rate +inf -> 0
    double next_exponential(double rate) {
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        if (rate == std::numeric_limits<double>::infinity()) return 0.0;
        return -log_open_unit() / rate;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t origin(std::uint64_t seed, std::uint64_t stream_id) {
        return mix(mix(seed + 0x632be59bd9b4e019ULL) + stream_id * 0x9e3779b97f4a7c15ULL);
    }
    double log_open_unit();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mlab
