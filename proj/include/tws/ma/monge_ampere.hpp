#pragma once

#include <array>

#include "tws/poly/bipoly.hpp"

namespace tws::ma {

// [u,v] = d11 u d22 v - 2 d12 u d12 v + d22 u d11 v, exact.
Poly2 bracket(const Poly2& u, const Poly2& v);

// First-order divergence decomposition of the bracket. The canonical grouping
//
//   d1[ d1(d2u d2v) - d2(d1u d2v) ] + d2[ d2(d1u d1v) - d1(d2u d1v) ] = -[u,v]
//
// holds identically; flux_p/flux_q are the two inner flux vectors, so
// d1(div flux_p) + d2(div flux_q) + [u,v] == 0. `residual` is that
// combination (identically zero); `printed_variant_residual` is the residual
// of the alternative grouping with the second flux read as
// (d1u d2v, -d2u d1v) under an outer minus, kept for diagnostics.
struct Decomposition {
    std::array<Poly2, 2> flux_p;
    std::array<Poly2, 2> flux_q;
    Poly2 combination;  // d1(div flux_p) + d2(div flux_q)
    Poly2 residual;
    Poly2 printed_variant_residual;
};

Decomposition divergence_decomposition(const Poly2& u, const Poly2& v);

// Exact change of variables x = (z+zbar)/2, y = (z-zbar)/(2i).
CPoly to_complex(const Poly2& p);

struct FromComplexResult {
    Poly2 real_part;
    Poly2 imag_defect;  // zero iff the input was real-valued
};

// Inverse substitution z = x+iy, zbar = x-iy, split into real and imaginary
// coefficient parts.
FromComplexResult from_complex(const CPoly& P);

// bracket_complex(U,V) = Uzz_bb Vzz - 2 Uz_zb Vz_zb + Uzz Vzb_zb, the
// conjugate-variable form satisfying
//   to_complex(bracket(u,v)) = -4 * bracket_complex(to_complex u, to_complex v).
CPoly bracket_complex(const CPoly& U, const CPoly& V);

// The three summands of Delta[u,v] = [Delta u, v] + [u, Delta v] +
// 2([u_x, v_x] + [u_y, v_y]), plus the (identically zero) residual of that
// expansion.
struct LaplacianExpansion {
    Poly2 term_lap_u;     // [Delta u, v]
    Poly2 term_lap_v;     // [u, Delta v]
    Poly2 term_gradients; // 2([u_x,v_x] + [u_y,v_y])
    Poly2 residual;       // sum - Delta [u,v]
};

LaplacianExpansion laplacian_bracket_expansion(const Poly2& u, const Poly2& v);

Poly2 laplacian(const Poly2& p);
CPoly d_z(const CPoly& p);
CPoly d_zbar(const CPoly& p);

}  // namespace tws::ma
