#include "tws/poly/bipoly.hpp"

#include <cmath>

namespace tws {

double eval(const Poly2& p, double x, double y) {
    double acc = 0;
    for (const auto& [k, v] : p.terms()) {
        acc += to_double(v) * std::pow(x, k.first) * std::pow(y, k.second);
    }
    return acc;
}

double majorant_norm(const CPoly& p) {
    double acc = 0;
    for (const auto& [k, v] : p.terms()) acc += abs1_double(v);
    return acc;
}

double majorant_norm(const Poly2& p) {
    double acc = 0;
    for (const auto& [k, v] : p.terms()) acc += std::fabs(to_double(v));
    return acc;
}

bool is_real_valued(const CPoly& p) {
    for (const auto& [k, v] : p.terms()) {
        GRat mirror = p.coeff(k.second, k.first);
        if (!(mirror == v.conj())) return false;
    }
    return true;
}

CPoly conj_function(const CPoly& p) {
    CPoly r;
    for (const auto& [k, v] : p.terms()) r.add_term(k.second, k.first, v.conj());
    return r;
}

}  // namespace tws
