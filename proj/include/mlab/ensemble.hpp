#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "mlab/rng.hpp"

namespace mlab {

// Worker count: MLAB_THREADS env override, else hardware concurrency.
unsigned ensemble_threads();

// Runs fn(i, rng_i) for i in [0, n) with one derived stream per index and
// collects the results in index order.  The reduction order is therefore
// independent of scheduling: same seed, same bits.
template <class R>
std::vector<R> run_ensemble(std::size_t n, const RandomSource& base,
                            const std::function<R(std::size_t, RandomSource&)>& fn) {
    std::vector<R> out(n);
    const unsigned workers = std::min<unsigned>(ensemble_threads(), static_cast<unsigned>(n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            RandomSource rng = base.stream(base.stream_id() * 0x100000000ULL + i);
            out[i] = fn(i, rng);
        }
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers) {
                RandomSource rng = base.stream(base.stream_id() * 0x100000000ULL + i);
                out[i] = fn(i, rng);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace mlab
