// AVX2 + FMA kernel variants. This TU is compiled with -mavx2 -mfma and must
// only be entered after cpu_has_avx2() returns true.

#include "tws/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define TWS_X86 1
#else
#define TWS_X86 0
#endif

#if TWS_X86

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace tws::simd {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + i));
        vmax = _mm256_max_pd(vmax, v);
    }
    __m128d lo = _mm256_castpd256_pd128(vmax);
    __m128d hi = _mm256_extractf128_pd(vmax, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, sh));
    for (; i < n; ++i) {
        double v = std::fabs(x[i]);
        if (v > m) m = v;
    }
    return m;
}

void mul_ew_avx2(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) out[i] = x[i] * y[i];
}

void legendre_batch_avx2(int deg, const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    if (deg == 0) {
        for (; i < n; ++i) out[i] = 1.0;
        return;
    }
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d pm1 = _mm256_set1_pd(1.0);
        __m256d p = vx;
        for (int k = 1; k < deg; ++k) {
            // Same recurrence and operation order as the scalar kernel, with
            // the multiply-add contracted; agreement is to a few ulp.
            __m256d t = _mm256_mul_pd(_mm256_set1_pd(2 * k + 1), _mm256_mul_pd(vx, p));
            t = _mm256_fnmadd_pd(_mm256_set1_pd(static_cast<double>(k)), pm1, t);
            t = _mm256_div_pd(t, _mm256_set1_pd(static_cast<double>(k + 1)));
            pm1 = p;
            p = t;
        }
        _mm256_storeu_pd(out + i, p);
    }
    for (; i < n; ++i) {
        double pm1 = 1.0;
        double p = x[i];
        for (int k = 1; k < deg; ++k) {
            double pn = ((2 * k + 1) * x[i] * p - k * pm1) / (k + 1);
            pm1 = p;
            p = pn;
        }
        out[i] = p;
    }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
    static const Kernels k{
        "avx2",     dot_avx2,    axpy_avx2,
        scale_avx2, sum_avx2,    max_abs_avx2,
        mul_ew_avx2, legendre_batch_avx2,
    };
    return &k;
}

}  // namespace tws::simd

#else

namespace tws::simd {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace tws::simd

#endif
