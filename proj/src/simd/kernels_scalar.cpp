#include <cmath>
#include <cstddef>

#include "tws/simd/kernels.hpp"

namespace tws::simd {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::fabs(x[i]);
        if (v > m) m = v;
    }
    return m;
}

void mul_ew_scalar(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

void legendre_batch_scalar(int deg, const double* x, double* out, std::size_t n) {
    if (deg == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 1.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double pm1 = 1.0;
        double p = x[i];
        for (int k = 1; k < deg; ++k) {
            // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
            double pn = ((2 * k + 1) * x[i] * p - k * pm1) / (k + 1);
            pm1 = p;
            p = pn;
        }
        out[i] = p;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{
        "scalar",    dot_scalar,    axpy_scalar,
        scale_scalar, sum_scalar,   max_abs_scalar,
        mul_ew_scalar, legendre_batch_scalar,
    };
    return k;
}

}  // namespace tws::simd
