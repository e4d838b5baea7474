#include <atomic>

#include "fmc/kernels.hpp"

namespace fmc::kern {

// Defined in kernels_avx2.cpp; nullptr when that unit was built without AVX2.
const Kernels* avx2_kernels_impl();

const Kernels* avx2_kernels() {
    static const Kernels* k = []() -> const Kernels* {
        const Kernels* impl = avx2_kernels_impl();
        if (!impl) return nullptr;
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2") ? impl : nullptr;
#else
        return nullptr;
#endif
    }();
    return k;
}

namespace {
std::atomic<const Kernels*> forced{nullptr};
}

const Kernels& active() {
    if (const Kernels* f = forced.load(std::memory_order_relaxed)) return *f;
    if (const Kernels* v = avx2_kernels()) return *v;
    return scalar_kernels();
}

void force(const Kernels* k) { forced.store(k, std::memory_order_relaxed); }

}  // namespace fmc::kern
