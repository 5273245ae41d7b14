#include "mlab/ensemble.hpp"

#include <algorithm>
#include <string>

namespace mlab {

unsigned ensemble_threads() {
    if (const char* env = std::getenv("MLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace mlab
