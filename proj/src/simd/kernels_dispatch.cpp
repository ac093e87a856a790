#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tws/simd/kernels.hpp"

namespace tws::simd {

const Kernels* avx2_kernels_impl();  // defined in kernels_avx2.cpp

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels* avx2_kernels() {
    if (!cpu_has_avx2()) return nullptr;
    return avx2_kernels_impl();
}

namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* pick_default() {
    if (const char* env = std::getenv("TWS_SIMD")) {
        std::string v(env);
        if (v == "scalar") return &scalar_kernels();
        if (v == "avx2") {
            if (const Kernels* k = avx2_kernels()) return k;
            // Requested backend unavailable: fall through to auto.
        }
    }
    if (const Kernels* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

}  // namespace

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = pick_default();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

void force_backend(const std::string& name) {
    if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
        return;
    }
    if (name == "scalar") {
        g_active.store(&scalar_kernels(), std::memory_order_release);
        return;
    }
    if (name == "avx2") {
        if (const Kernels* k = avx2_kernels()) {
            g_active.store(k, std::memory_order_release);
            return;
        }
        throw std::invalid_argument("simd backend 'avx2' not available on this CPU");
    }
    throw std::invalid_argument("unknown simd backend: " + name);
}

}  // namespace tws::simd
