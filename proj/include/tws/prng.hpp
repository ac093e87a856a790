#pragma once

#include <cstdint>
#include <random>

#include "tws/rational.hpp"

namespace tws {

// Deterministic RNG: mt19937_64 outputs are specified by the standard, and all
// derived draws below avoid std::uniform_*_distribution (whose mapping is
// implementation-defined). Same seed => same report bytes, on any platform.
using Prng = std::mt19937_64;

inline std::uint64_t rand_u64_below(Prng& rng, std::uint64_t n) {
    // Rejection sampling for an unbiased draw in [0, n).
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline long rand_int(Prng& rng, long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(rand_u64_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline double rand_unit(Prng& rng) {
    // 53 random bits -> [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rand_real(Prng& rng, double lo, double hi) {
    return lo + (hi - lo) * rand_unit(rng);
}

// Small random rational, numerator in [-max_num, max_num], denominator in [1, max_den].
inline Rational rand_rational(Prng& rng, long max_num = 9, long max_den = 4) {
    Rational r(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
    r.canonicalize();
    return r;
}

inline GRat rand_grat(Prng& rng, long max_num = 9, long max_den = 4) {
    return GRat(rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den));
}

}  // namespace tws
