#include "mlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace mlab::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* pick_default() {
    if (const char* env = std::getenv("MLAB_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_table();
        if (want == "avx2" && avx2_table() && cpu_has_avx2()) return avx2_table();
    }
    if (avx2_table() && cpu_has_avx2()) return avx2_table();
    return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> s{pick_default()};
    return s;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

bool set_backend(std::string_view name) {
    if (name == "scalar") {
        slot().store(&scalar_table());
        return true;
    }
    if (name == "avx2") {
        if (avx2_table() && cpu_has_avx2()) {
            slot().store(avx2_table());
            return true;
        }
        return false;
    }
    return false;
}

std::string_view active_backend() { return active().name; }

}  // namespace mlab::kernels
