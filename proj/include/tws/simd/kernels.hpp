#pragma once

#include <cstddef>
#include <string>

namespace tws::simd {

// Double-precision inner-loop kernels used by the quadrature, spectral-sum and
// grid-synthesis paths. Scalar reference implementations are the semantic
// definition; the AVX2 variants must agree with them to a few ulp and are
// selected at runtime via cpuid. Exact-rational code paths never come through
// here.
struct Kernels {
    const char* name;

    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x[i] *= a
    void (*scale)(double a, double* x, std::size_t n);
    // sum_i x[i]
    double (*sum)(const double* x, std::size_t n);
    // max_i |x[i]|
    double (*max_abs)(const double* x, std::size_t n);
    // out[i] = x[i]*y[i]
    void (*mul_ew)(const double* x, const double* y, double* out, std::size_t n);
    // out[i] = P_deg(x[i]) by the three-term Legendre recurrence, batched
    // across evaluation points.
    void (*legendre_batch)(int deg, const double* x, double* out, std::size_t n);
};

const Kernels& scalar_kernels();

// Null when the build has no AVX2 code path or the CPU lacks AVX2.
const Kernels* avx2_kernels();

// The dispatched kernel set. Honors force_backend() and, at first use, the
// TWS_SIMD environment variable ("scalar", "avx2", "auto").
const Kernels& active();

// "scalar" | "avx2" | "auto"; throws std::invalid_argument for unknown names
// or when AVX2 is requested but unavailable.
void force_backend(const std::string& name);

bool cpu_has_avx2();

// Convenience forwarders.
inline double dot(const double* x, const double* y, std::size_t n) {
    return active().dot(x, y, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline double max_abs(const double* x, std::size_t n) { return active().max_abs(x, n); }
inline void mul_ew(const double* x, const double* y, double* out, std::size_t n) {
    active().mul_ew(x, y, out, n);
}
inline void legendre_batch(int deg, const double* x, double* out, std::size_t n) {
    active().legendre_batch(deg, x, out, n);
}

}  // namespace tws::simd
