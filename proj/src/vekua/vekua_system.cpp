#include "tws/vekua/vekua_system.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace tws::vekua {

namespace {

// Moment indices j entering the "from above" sums of order n: j = n+1, n+3, ...
std::vector<int> above_indices(int n, int N) {
    std::vector<int> v;
    for (int j = n + 1; j <= N; j += 2) v.push_back(j);
    return v;
}

// Moment indices j entering the "from below" sums of order n: j = n-1, n-3, ... >= 0.
std::vector<int> below_indices(int n) {
    std::vector<int> v;
    for (int j = n - 1; j >= 0; j -= 2) v.push_back(j);
    return v;
}

TrigField zero_like(const MomentField& U) {
    for (const auto& c : U.comps)
        for (const auto& f : c)
            if (!f.empty()) return TrigField(f.a(), f.b(), f.max_mode());
    return TrigField(1.0, 1.0, 0);
}

TrigField sum_above(const MomentField& U, int i, int n) {
    TrigField acc = zero_like(U);
    for (int j : above_indices(n, U.N)) acc.axpy(1.0, U.u(j, i));
    return acc;
}

TrigField sum_below(const MomentField& U, int i, int n) {
    TrigField acc = zero_like(U);
    for (int j : below_indices(n)) acc.axpy(1.0, U.u(j, i));
    return acc;
}

struct Scalars {
    double lambda, mu, h;
    double lam_p_mu, lam_p_2mu;
};

Scalars scalars(const PlateConfig& c) {
    Scalars s{};
    s.lambda = to_double(c.lambda);
    s.mu = to_double(c.mu);
    s.h = to_double(c.h);
    s.lam_p_mu = s.lambda + s.mu;
    s.lam_p_2mu = s.lambda + 2 * s.mu;
    return s;
}

// Face-trace sums of the constitutive relations: A_i = (g_i^+ + g_i^-)/2 and
// B_i = (g_i^+ - g_i^-)/2 induced by U.
TrigField trace_A(const MomentField& U, const Scalars& s, int i) {
    TrigField acc = zero_like(U);
    for (int j = 0; j <= U.N; ++j) {
        const double w = static_cast<double>(j) * (j + 1) / (2 * s.h);
        if (i < 2) {
            if (j % 2 == 0) {
                acc.axpy(s.mu, i == 0 ? U.u(j, 2).dx() : U.u(j, 2).dy());
            } else {
                acc.axpy(s.mu * w, U.u(j, i));
            }
        } else {
            if (j % 2 == 0) {
                acc.axpy(s.lambda, U.u(j, 0).dx());
                acc.axpy(s.lambda, U.u(j, 1).dy());
            } else {
                acc.axpy(s.lam_p_2mu * w, U.u(j, 2));
            }
        }
    }
    return acc;
}

TrigField trace_B(const MomentField& U, const Scalars& s, int i) {
    TrigField acc = zero_like(U);
    for (int j = 0; j <= U.N; ++j) {
        const double w = static_cast<double>(j) * (j + 1) / (2 * s.h);
        if (i < 2) {
            if (j % 2 == 1) {
                acc.axpy(s.mu, i == 0 ? U.u(j, 2).dx() : U.u(j, 2).dy());
            } else {
                acc.axpy(s.mu * w, U.u(j, i));
            }
        } else {
            if (j % 2 == 1) {
                acc.axpy(s.lambda, U.u(j, 0).dx());
                acc.axpy(s.lambda, U.u(j, 1).dy());
            } else {
                acc.axpy(s.lam_p_2mu * w, U.u(j, 2));
            }
        }
    }
    return acc;
}

}  // namespace

MomentField::MomentField(int N_, double a, double b, int max_mode) : N(N_) {
    if (N_ < 0) throw std::invalid_argument("MomentField: N must be >= 0");
    comps.resize(static_cast<std::size_t>(N_) + 1);
    for (auto& c : comps)
        for (auto& f : c) f = TrigField(a, b, max_mode);
}

MomentField MomentField::random_sine(Prng& rng, int N, double a, double b, int max_mode) {
    MomentField U(N, a, b, max_mode);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < 3; ++i) U.u(n, i) = TrigField::random_sine(rng, a, b, max_mode);
    return U;
}

double MomentField::sup_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : comps)
        for (const auto& f : c) m = std::max(m, f.sup_abs_coeff());
    return m;
}

MomentOperator::MomentOperator(PlateConfig config, int N) : cfg_(std::move(config)), N_(N) {
    cfg_.validate();
    if (N < 0) throw std::invalid_argument("MomentOperator: N must be >= 0");
}

MomentOperator assemble_L(const PlateConfig& config, int N) { return MomentOperator(config, N); }

MomentField MomentOperator::apply(const MomentField& U) const {
    if (U.N != N_) throw std::invalid_argument("MomentOperator::apply: order mismatch");
    const Scalars s = scalars(cfg_);
    TrigField z = zero_like(U);
    MomentField out;
    out.N = N_;
    out.comps.assign(static_cast<std::size_t>(N_) + 1, {z, z, z});

    std::array<TrigField, 3> A = {trace_A(U, s, 0), trace_A(U, s, 1), trace_A(U, s, 2)};
    std::array<TrigField, 3> B = {trace_B(U, s, 0), trace_B(U, s, 1), trace_B(U, s, 2)};

    for (int m = 0; m <= N_; ++m) {
        const double cpl = (2 * m + 1) / s.h;
        const double zo = s.mu * (2 * m + 1) / (2 * s.h * s.h);
        const double zo3 = s.lam_p_2mu * (2 * m + 1) / (2 * s.h * s.h);

        TrigField div_m = U.u(m, 0).dx() + U.u(m, 1).dy();
        TrigField s3a = sum_above(U, 2, m);
        TrigField s3b = sum_below(U, 2, m);
        TrigField coup = s3a.scaled(s.lambda * cpl);
        coup.axpy(-s.mu * cpl, s3b);

        for (int alpha = 0; alpha < 2; ++alpha) {
            TrigField r = U.u(m, alpha).laplacian().scaled(s.mu);
            r.axpy(s.lam_p_mu, alpha == 0 ? div_m.dx() : div_m.dy());
            r.axpy(1.0, alpha == 0 ? coup.dx() : coup.dy());
            for (int i = m; i >= 1; i -= 2) {
                r.axpy(-zo * i * (i + 1), U.u(i, alpha));
            }
            r.axpy(cpl, (m % 2 == 0 ? B : A)[static_cast<std::size_t>(alpha)]);
            out.u(m, alpha) = std::move(r);
        }

        TrigField r3 = U.u(m, 2).laplacian().scaled(s.mu);
        TrigField sa0 = sum_above(U, 0, m), sa1 = sum_above(U, 1, m);
        TrigField sb0 = sum_below(U, 0, m), sb1 = sum_below(U, 1, m);
        r3.axpy(s.mu * cpl, sa0.dx() + sa1.dy());
        r3.axpy(-s.lambda * cpl, sb0.dx() + sb1.dy());
        for (int i = m; i >= 1; i -= 2) {
            r3.axpy(-zo3 * i * (i + 1), U.u(i, 2));
        }
        r3.axpy(cpl, (m % 2 == 0 ? B : A)[2]);
        out.u(m, 2) = std::move(r3);
    }
    return out;
}

double MomentOperator::energy(const MomentField& U, const MomentField& V) const {
    if (U.N != N_ || V.N != N_) throw std::invalid_argument("MomentOperator::energy: order mismatch");
    const Scalars s = scalars(cfg_);

    // Legendre expansion coefficients of the strain components of W.
    auto strains = [&](const MomentField& W, int m) {
        struct Eps {
            TrigField e11, e22, e12, e13, e23, e33;
        } e;
        const double zf = (2 * m + 1) / s.h;
        e.e11 = W.u(m, 0).dx();
        e.e22 = W.u(m, 1).dy();
        e.e12 = (W.u(m, 0).dy() + W.u(m, 1).dx()).scaled(0.5);
        TrigField t0 = sum_above(W, 0, m), t1 = sum_above(W, 1, m), t2 = sum_above(W, 2, m);
        e.e13 = (W.u(m, 2).dx() + t0.scaled(zf)).scaled(0.5);
        e.e23 = (W.u(m, 2).dy() + t1.scaled(zf)).scaled(0.5);
        e.e33 = t2.scaled(zf);
        return e;
    };

    double acc = 0.0;
    for (int m = 0; m <= N_; ++m) {
        auto eu = strains(U, m);
        auto ev = strains(V, m);
        TrigField tr = eu.e11 + eu.e22 + eu.e33;
        auto sig = [&](const TrigField& eij, bool diag) {
            TrigField t = eij.scaled(2 * s.mu);
            if (diag) t.axpy(s.lambda, tr);
            return t;
        };
        const double cmh = 2.0 * s.h / (2 * m + 1);
        double part = TrigField::inner(sig(eu.e11, true), ev.e11) +
                      TrigField::inner(sig(eu.e22, true), ev.e22) +
                      TrigField::inner(sig(eu.e33, true), ev.e33) +
                      2.0 * TrigField::inner(sig(eu.e12, false), ev.e12) +
                      2.0 * TrigField::inner(sig(eu.e13, false), ev.e13) +
                      2.0 * TrigField::inner(sig(eu.e23, false), ev.e23);
        acc += cmh * part;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Exact symbols
// ---------------------------------------------------------------------------

namespace {

struct SymbolBuilder {
    int N;
    SymbolMatrix M;
    explicit SymbolBuilder(int N_) : N(N_) {
        const std::size_t dim = 3 * (static_cast<std::size_t>(N_) + 1);
        M.assign(dim, std::vector<GRat>(dim, GRat(0)));
    }
    void add(int m, int i_row, int n, int i_col, const GRat& v) {
        M[static_cast<std::size_t>(3 * m + i_row)][static_cast<std::size_t>(3 * n + i_col)] += v;
    }
};

struct RatScalars {
    Rational lambda, mu, h, lam_p_mu, lam_p_2mu;
};

RatScalars rat_scalars(const PlateConfig& c) {
    return {c.lambda, c.mu, c.h, c.lambda + c.mu, c.lambda + 2 * c.mu};
}

// Adds the face-trace row couplings: row (m,i) += coeff * T_i where T_i is
// B_i for even m and A_i for odd m.
void add_trace_terms(SymbolBuilder& Mb, const RatScalars& rs, const std::array<GRat, 2>& ik,
                     int m, int i_row, const Rational& coeff) {
    const bool even_row = m % 2 == 0;
    for (int j = 0; j <= Mb.N; ++j) {
        // B pairs derivative terms with odd j, mass terms with even j; A swaps.
        const bool deriv_j = even_row ? (j % 2 == 1) : (j % 2 == 0);
        const Rational w = Rational(j) * Rational(j + 1) / (2 * rs.h);
        if (i_row < 2) {
            if (deriv_j) {
                Mb.add(m, i_row, j, 2, (coeff * rs.mu) * ik[static_cast<std::size_t>(i_row)]);
            } else {
                Mb.add(m, i_row, j, i_row, GRat(coeff * rs.mu * w));
            }
        } else {
            if (deriv_j) {
                Mb.add(m, 2, j, 0, (coeff * rs.lambda) * ik[0]);
                Mb.add(m, 2, j, 1, (coeff * rs.lambda) * ik[1]);
            } else {
                Mb.add(m, 2, j, 2, GRat(coeff * rs.lam_p_2mu * w));
            }
        }
    }
}

}  // namespace

SymbolMatrix MomentOperator::symbol(const Rational& k1, const Rational& k2) const {
    const RatScalars rs = rat_scalars(cfg_);
    const std::array<GRat, 2> ik = {GRat(Rational(0), k1), GRat(Rational(0), k2)};
    const std::array<Rational, 2> k = {k1, k2};
    const Rational k_sq = k1 * k1 + k2 * k2;
    SymbolBuilder Mb(N_);

    for (int m = 0; m <= N_; ++m) {
        const Rational cpl = Rational(2 * m + 1) / rs.h;
        const Rational zo = rs.mu * Rational(2 * m + 1) / (2 * rs.h * rs.h);
        const Rational zo3 = rs.lam_p_2mu * Rational(2 * m + 1) / (2 * rs.h * rs.h);

        for (int alpha = 0; alpha < 2; ++alpha) {
            Mb.add(m, alpha, m, alpha, GRat(-rs.mu * k_sq));
            for (int beta = 0; beta < 2; ++beta) {
                Mb.add(m, alpha, m, beta,
                       GRat(-rs.lam_p_mu * k[static_cast<std::size_t>(alpha)] *
                            k[static_cast<std::size_t>(beta)]));
            }
            for (int j : above_indices(m, N_)) {
                Mb.add(m, alpha, j, 2, (cpl * rs.lambda) * ik[static_cast<std::size_t>(alpha)]);
            }
            for (int j : below_indices(m)) {
                Mb.add(m, alpha, j, 2, (-cpl * rs.mu) * ik[static_cast<std::size_t>(alpha)]);
            }
            for (int i = m; i >= 1; i -= 2) {
                Mb.add(m, alpha, i, alpha, GRat(-zo * Rational(i) * Rational(i + 1)));
            }
            add_trace_terms(Mb, rs, ik, m, alpha, cpl);
        }

        Mb.add(m, 2, m, 2, GRat(-rs.mu * k_sq));
        for (int j : above_indices(m, N_)) {
            Mb.add(m, 2, j, 0, (cpl * rs.mu) * ik[0]);
            Mb.add(m, 2, j, 1, (cpl * rs.mu) * ik[1]);
        }
        for (int j : below_indices(m)) {
            Mb.add(m, 2, j, 0, (-cpl * rs.lambda) * ik[0]);
            Mb.add(m, 2, j, 1, (-cpl * rs.lambda) * ik[1]);
        }
        for (int i = m; i >= 1; i -= 2) {
            Mb.add(m, 2, i, 2, GRat(-zo3 * Rational(i) * Rational(i + 1)));
        }
        add_trace_terms(Mb, rs, ik, m, 2, cpl);
    }
    return Mb.M;
}

SymbolMatrix MomentOperator::oracle_symbol(const Rational& k1, const Rational& k2) const {
    const RatScalars rs = rat_scalars(cfg_);
    const std::array<GRat, 2> ik = {GRat(Rational(0), k1), GRat(Rational(0), k2)};
    const std::array<Rational, 2> k = {k1, k2};
    const Rational k_sq = k1 * k1 + k2 * k2;
    SymbolBuilder Mb(N_);

    for (int m = 0; m <= N_; ++m) {
        const Rational cpl = Rational(2 * m + 1) / rs.h;

        // --- in-plane rows: ik_beta sigma_alpha_beta^m + transverse terms
        for (int alpha = 0; alpha < 2; ++alpha) {
            // divergence of the Hookean in-plane stress coefficients
            Mb.add(m, alpha, m, alpha, GRat(-rs.mu * k_sq));
            for (int beta = 0; beta < 2; ++beta) {
                Mb.add(m, alpha, m, beta,
                       GRat(-rs.lam_p_mu * k[static_cast<std::size_t>(alpha)] *
                            k[static_cast<std::size_t>(beta)]));
            }
            for (int j : above_indices(m, N_)) {
                Mb.add(m, alpha, j, 2, (cpl * rs.lambda) * ik[static_cast<std::size_t>(alpha)]);
            }
            // recovered transverse shear, from above
            if (m >= 1) {
                for (int s = m + 1; s <= N_ + 1; s += 2) {
                    const Rational w =
                        (Rational(s + 1) * Rational(s + 2) - Rational(m) * Rational(m + 1)) /
                        (2 * rs.h);
                    if (s <= N_) {
                        Mb.add(m, alpha, s, 2, (cpl * rs.mu) * ik[static_cast<std::size_t>(alpha)]);
                    }
                    if (s + 1 <= N_) {
                        Mb.add(m, alpha, s + 1, alpha, GRat(cpl * rs.mu * w));
                    }
                }
            }
        }

        // --- transverse row: ik_beta H_beta^m + recovered sigma_33, from above
        Mb.add(m, 2, m, 2, GRat(-rs.mu * k_sq));
        for (int j : above_indices(m, N_)) {
            Mb.add(m, 2, j, 0, (cpl * rs.mu) * ik[0]);
            Mb.add(m, 2, j, 1, (cpl * rs.mu) * ik[1]);
        }
        if (m >= 1) {
            for (int s = m + 1; s <= N_ + 1; s += 2) {
                const Rational w =
                    (Rational(s + 1) * Rational(s + 2) - Rational(m) * Rational(m + 1)) /
                    (2 * rs.h);
                if (s <= N_) {
                    Mb.add(m, 2, s, 0, (cpl * rs.lambda) * ik[0]);
                    Mb.add(m, 2, s, 1, (cpl * rs.lambda) * ik[1]);
                }
                if (s + 1 <= N_) {
                    Mb.add(m, 2, s + 1, 2, GRat(cpl * rs.lam_p_2mu * w));
                }
            }
        }

        // --- the m = 0 rows carry the face-difference trace of the stress
        if (m == 0) {
            const Rational c0 = Rational(1) / rs.h;
            for (int i = 0; i < 3; ++i) add_trace_terms(Mb, rs, ik, 0, i, c0);
        }
    }
    return Mb.M;
}

// ---------------------------------------------------------------------------
// Loads, stress recovery, face traces
// ---------------------------------------------------------------------------

MomentField rhs_moments(const PlateConfig& config, const SurfaceLoads& loads, int N) {
    config.validate();
    const double h = to_double(config.h);
    MomentField out;
    out.N = N;
    out.comps.resize(static_cast<std::size_t>(N) + 1);
    // The remaining face-trace combinations of the collapsed system are the
    // operator's own trace couplings (assemble_L keeps them on the left, as
    // functions of U); the data side carries the body moments and the n = 0
    // Kronecker-delta face-load term only.
    for (int n = 0; n <= N; ++n) {
        const double scale = (2 * n + 1) / (2 * h);  // 1/(h c_n)
        for (int i = 0; i < 3; ++i) {
            TrigField acc = loads.f_moment(n, i);
            if (n == 0) {
                acc.axpy(-0.5, loads.g_plus[static_cast<std::size_t>(i)]);
                acc.axpy(0.5, loads.g_minus[static_cast<std::size_t>(i)]);
            }
            out.comps[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] =
                acc.scaled(scale);
        }
    }
    return out;
}

StressMomentField recover_stress_moments(const MomentField& U, const PlateConfig& config,
                                         const SurfaceLoads& /*loads*/) {
    const Scalars s = scalars(config);
    const int N = U.N;
    TrigField z = zero_like(U);
    StressMomentField out;
    out.N = N;
    out.in_plane.assign(static_cast<std::size_t>(N) + 1, {z, z, z});
    out.transverse.assign(static_cast<std::size_t>(N) + 2, {z, z, z});

    for (int m = 0; m <= N; ++m) {
        const double zf = (2 * m + 1) / s.h;
        TrigField t3 = sum_above(U, 2, m).scaled(s.lambda * zf);
        TrigField s11 = U.u(m, 0).dx().scaled(s.lam_p_2mu);
        s11.axpy(s.lambda, U.u(m, 1).dy());
        s11.axpy(1.0, t3);
        TrigField s22 = U.u(m, 1).dy().scaled(s.lam_p_2mu);
        s22.axpy(s.lambda, U.u(m, 0).dx());
        s22.axpy(1.0, t3);
        TrigField s12 = (U.u(m, 0).dy() + U.u(m, 1).dx()).scaled(s.mu);
        out.in_plane[static_cast<std::size_t>(m)] = {std::move(s11), std::move(s22),
                                                     std::move(s12)};
    }

    for (int m = 0; m <= N + 1; ++m) {
        TrigField s13 = z, s23 = z, s33 = z;
        for (int t = m + 1; t <= N + 1; t += 2) {
            const double w = (static_cast<double>(t + 1) * (t + 2) -
                              static_cast<double>(m) * (m + 1)) /
                             (2 * s.h);
            if (t <= N) {
                s13.axpy(s.mu, U.u(t, 2).dx());
                s23.axpy(s.mu, U.u(t, 2).dy());
                s33.axpy(s.lambda, U.u(t, 0).dx());
                s33.axpy(s.lambda, U.u(t, 1).dy());
            }
            if (t + 1 <= N) {
                s13.axpy(s.mu * w, U.u(t + 1, 0));
                s23.axpy(s.mu * w, U.u(t + 1, 1));
                s33.axpy(s.lam_p_2mu * w, U.u(t + 1, 2));
            }
        }
        out.transverse[static_cast<std::size_t>(m)] = {std::move(s13), std::move(s23),
                                                       std::move(s33)};
    }
    return out;
}

std::array<TrigField, 3> induced_face_trace(const MomentField& U, const PlateConfig& config,
                                            Face face) {
    const Scalars s = scalars(config);
    std::array<TrigField, 3> out;
    for (int i = 0; i < 3; ++i) {
        TrigField A = trace_A(U, s, i);
        TrigField B = trace_B(U, s, i);
        A.axpy(face == Face::Plus ? 1.0 : -1.0, B);
        out[static_cast<std::size_t>(i)] = std::move(A);
    }
    return out;
}

namespace {

double block_defect(const TrigField& reconstructed, const TrigField& data) {
    TrigField d = reconstructed;
    d.axpy(-1.0, data);
    return d.sup_abs_coeff();
}

}  // namespace

FaceTraceDefect face_trace_defect(const MomentField& U, const SurfaceLoads& loads,
                                  const PlateConfig& config) {
    FaceTraceDefect out;
    const double h = to_double(config.h);
    StressMomentField S = recover_stress_moments(U, config, loads);

    // (a) difference-basis representation: evaluate the series coefficientwise
    // at z = +-h; the bracket contributions cancel identically.
    const TrigField* any = nullptr;
    for (int i = 0; i < 3 && !any; ++i)
        if (!loads.g_plus[static_cast<std::size_t>(i)].empty())
            any = &loads.g_plus[static_cast<std::size_t>(i)];
    if (!any) any = &S.transverse[0][0];
    const int M = any->max_mode();
    for (int i = 0; i < 3; ++i) {
        const TrigField& gp = loads.g_plus[static_cast<std::size_t>(i)];
        const TrigField& gm = loads.g_minus[static_cast<std::size_t>(i)];
        for (int bx = 0; bx < 2; ++bx) {
            for (int by = 0; by < 2; ++by) {
                for (int mx = 0; mx <= M; ++mx) {
                    for (int my = 0; my <= M; ++my) {
                        DifferenceBasisSeries<double> ser;
                        ser.h = h;
                        ser.g_plus = gp.get(static_cast<Trig>(bx), mx, static_cast<Trig>(by), my);
                        ser.g_minus = gm.get(static_cast<Trig>(bx), mx, static_cast<Trig>(by), my);
                        ser.brackets.resize(S.transverse.size() - 1);
                        for (std::size_t sidx = 1; sidx < S.transverse.size(); ++sidx) {
                            ser.brackets[sidx - 1] =
                                S.transverse[sidx][static_cast<std::size_t>(i)].get(
                                    static_cast<Trig>(bx), mx, static_cast<Trig>(by), my);
                        }
                        out.rep_plus = std::max(
                            out.rep_plus, std::fabs(ser.face_trace(Face::Plus) - ser.g_plus));
                        out.rep_minus = std::max(
                            out.rep_minus, std::fabs(ser.face_trace(Face::Minus) - ser.g_minus));
                    }
                }
            }
        }
    }

    // (b) raw constitutive trace sums against the prescribed data
    auto tp = induced_face_trace(U, config, Face::Plus);
    auto tm = induced_face_trace(U, config, Face::Minus);
    for (int i = 0; i < 3; ++i) {
        out.raw_plus = std::max(out.raw_plus, block_defect(tp[static_cast<std::size_t>(i)],
                                                           loads.g_plus[static_cast<std::size_t>(i)]));
        out.raw_minus = std::max(out.raw_minus, block_defect(tm[static_cast<std::size_t>(i)],
                                                             loads.g_minus[static_cast<std::size_t>(i)]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Korn bounds and check
// ---------------------------------------------------------------------------

KornBounds korn_bounds(const MomentField& U, const PlateConfig& config) {
    const double h = to_double(config.h);
    const double mu = to_double(config.mu);
    const double a = to_double(config.a);
    const double b = to_double(config.b);
    const double kappa_sq = M_PI * M_PI * (1.0 / (a * a) + 1.0 / (b * b));
    const int N = U.N;

    KornBounds out;

    // diagonal reading
    double grad1 = 0, div1 = 0, mass1 = 0, norm2 = 0;
    for (int m = 0; m <= N; ++m) {
        const double w1 = 1.0 / (2 * m + 1);
        for (int al = 0; al < 2; ++al) {
            TrigField gx = U.u(m, al).dx();
            TrigField gy = U.u(m, al).dy();
            grad1 += w1 * (TrigField::inner(gx, gx) + TrigField::inner(gy, gy));
            mass1 += w1 * TrigField::inner(U.u(m, al), U.u(m, al));
        }
        TrigField dv = U.u(m, 0).dx() + U.u(m, 1).dy();
        div1 += w1 * TrigField::inner(dv, dv);
        TrigField s3 = sum_above(U, 2, m);
        norm2 += (2 * m + 1) / (h * h) * TrigField::inner(s3, s3);
    }
    out.bound14_diag = grad1 + div1 + 2.0 * norm2;
    out.bound16_diag = mu * (kappa_sq * mass1 + 2.0 * norm2);

    // gram reading: weighted moment sums
    TrigField W0 = zero_like(U), W1 = zero_like(U), Z = zero_like(U);
    for (int m = 0; m <= N; ++m) {
        const double w = 1.0 / std::sqrt(2.0 * m + 1.0);
        W0.axpy(w, U.u(m, 0));
        W1.axpy(w, U.u(m, 1));
        Z.axpy(std::sqrt(2.0 * m + 1.0), sum_above(U, 2, m));
    }
    double gradg = 0;
    for (const TrigField* w : {&W0, &W1}) {
        TrigField gx = w->dx();
        TrigField gy = w->dy();
        gradg += TrigField::inner(gx, gx) + TrigField::inner(gy, gy);
    }
    TrigField dvg = W0.dx() + W1.dy();
    const double z2 = TrigField::inner(Z, Z) / (h * h);
    out.bound14_gram = gradg + TrigField::inner(dvg, dvg) + 2.0 * z2;
    out.bound16_gram =
        mu * (kappa_sq * (TrigField::inner(W0, W0) + TrigField::inner(W1, W1)) + 2.0 * z2);
    return out;
}

KornReport korn_check(const PlateConfig& config, int N, int trials, std::uint64_t seed,
                      int max_mode) {
    if (trials < 1) throw std::invalid_argument("korn_check: trials must be >= 1");
    config.validate();
    const double a = to_double(config.a);
    const double b = to_double(config.b);
    const double h = to_double(config.h);
    const double mu = to_double(config.mu);
    MomentOperator op = assemble_L(config, N);

    KornReport rep;
    rep.N = N;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_mode = max_mode;
    rep.min_margin = std::numeric_limits<double>::infinity();
    rep.empirical_c14 = std::numeric_limits<double>::infinity();
    rep.empirical_c16 = std::numeric_limits<double>::infinity();
    rep.theorem3_ratio = std::numeric_limits<double>::infinity();

    Prng rng(seed);
    for (int t = 0; t < trials; ++t) {
        MomentField U = MomentField::random_sine(rng, N, a, b, max_mode);
        KornTrialResult r;
        r.energy = op.energy(U, U);
        r.bounds = korn_bounds(U, config);
        r.margin = r.energy - std::max(r.bounds.bound14_diag, r.bounds.bound16_diag);
        rep.min_margin = std::min(rep.min_margin, r.margin);
        if (r.bounds.bound14_diag > 0)
            rep.empirical_c14 = std::min(rep.empirical_c14, r.energy / r.bounds.bound14_diag);
        if (r.bounds.bound16_diag > 0)
            rep.empirical_c16 = std::min(rep.empirical_c16, r.energy / r.bounds.bound16_diag);

        // Theorem-3 style ratio, reported without a pass/fail: constants of
        // the free-boundary bound are unspecified.
        double n1 = 0, n2 = 0;
        for (int m = 0; m <= N; ++m) {
            for (int i = 0; i < 3; ++i) {
                n1 += TrigField::inner(U.u(m, i), U.u(m, i)) / (2 * m + 1);
            }
            for (int i = 0; i < 3; ++i) {
                TrigField sa = sum_above(U, i, m);
                n2 += (2 * m + 1) / (h * h) * TrigField::inner(sa, sa);
            }
        }
        if (n1 + n2 > 0) {
            rep.theorem3_ratio =
                std::min(rep.theorem3_ratio, (r.energy / (2 * h)) / (2 * mu * (n1 + n2)));
        }
        if (r.margin < -1e-10 && !rep.first_violation) rep.first_violation = t;
        rep.trial_results.push_back(r);
    }
    rep.all_nonnegative = !rep.first_violation.has_value();
    return rep;
}

// ---------------------------------------------------------------------------
// Dense per-mode solve
// ---------------------------------------------------------------------------

namespace {

// Navier block types per displacement component.
constexpr Trig kXType[3] = {Trig::Cos, Trig::Sin, Trig::Sin};
constexpr Trig kYType[3] = {Trig::Sin, Trig::Cos, Trig::Sin};

bool component_valid(int i, int m1, int m2) {
    if (kXType[i] == Trig::Sin && m1 == 0) return false;
    if (kYType[i] == Trig::Sin && m2 == 0) return false;
    return true;
}

// Gaussian elimination with partial pivoting for the small per-mode systems.
std::vector<double> lu_solve(std::vector<std::vector<double>> A, std::vector<double> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::fabs(A[r][k]) > std::fabs(A[piv][k])) piv = r;
        if (A[piv][k] == 0.0) throw std::runtime_error("solve_reduced: singular mode block");
        std::swap(A[piv], A[k]);
        std::swap(rhs[piv], rhs[k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = A[r][k] / A[k][k];
            if (f == 0.0) continue;
            for (std::size_t c = k; c < n; ++c) A[r][c] -= f * A[k][c];
            rhs[r] -= f * rhs[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double acc = rhs[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
        x[r] = acc / A[r][r];
    }
    return x;
}

}  // namespace

MomentField solve_reduced(const PlateConfig& config, const SurfaceLoads& loads, int N) {
    config.validate();
    MomentField rhs = rhs_moments(config, loads, N);
    const double a = to_double(config.a);
    const double b = to_double(config.b);

    int M = 0;
    for (const auto& c : rhs.comps)
        for (const auto& f : c)
            if (!f.empty()) M = std::max(M, f.max_mode());

    // Modes excited by the load, per the Navier block structure.
    std::set<std::pair<int, int>> modes;
    for (int n = 0; n <= N; ++n) {
        for (int i = 0; i < 3; ++i) {
            const TrigField& f = rhs.comps[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            if (f.empty()) continue;
            if (!f.is_pure(kXType[i], kYType[i])) {
                throw std::invalid_argument(
                    "solve_reduced: loads must follow the Navier block structure "
                    "(u1 ~ cos*sin, u2 ~ sin*cos, u3 ~ sin*sin)");
            }
            for (int mx = 0; mx <= f.max_mode(); ++mx)
                for (int my = 0; my <= f.max_mode(); ++my)
                    if (f.get(kXType[i], mx, kYType[i], my) != 0.0) modes.insert({mx, my});
        }
    }

    MomentField U(N, a, b, M);
    MomentOperator op = assemble_L(config, N);

    for (auto [m1, m2] : modes) {
        std::vector<std::pair<int, int>> unknowns;  // (n, i)
        for (int n = 0; n <= N; ++n)
            for (int i = 0; i < 3; ++i)
                if (component_valid(i, m1, m2)) unknowns.emplace_back(n, i);
        const std::size_t dim = unknowns.size();
        if (dim == 0) continue;

        std::vector<std::vector<double>> A(dim, std::vector<double>(dim, 0.0));
        std::vector<double> rv(dim, 0.0);
        for (std::size_t col = 0; col < dim; ++col) {
            auto [nc, ic] = unknowns[col];
            MomentField basis(N, a, b, std::max(M, std::max(m1, m2)));
            basis.u(nc, ic).at(kXType[ic], m1, kYType[ic], m2) = 1.0;
            MomentField img = op.apply(basis);
            for (std::size_t row = 0; row < dim; ++row) {
                auto [nr, ir] = unknowns[row];
                A[row][col] = img.u(nr, ir).get(kXType[ir], m1, kYType[ir], m2);
            }
        }
        for (std::size_t row = 0; row < dim; ++row) {
            auto [nr, ir] = unknowns[row];
            rv[row] = rhs.comps[static_cast<std::size_t>(nr)][static_cast<std::size_t>(ir)].get(
                kXType[ir], m1, kYType[ir], m2);
        }
        auto x = lu_solve(std::move(A), std::move(rv));
        for (std::size_t col = 0; col < dim; ++col) {
            auto [nc, ic] = unknowns[col];
            if (x[col] != 0.0) U.u(nc, ic).at(kXType[ic], m1, kYType[ic], m2) = x[col];
        }
    }
    return U;
}

}  // namespace tws::vekua
