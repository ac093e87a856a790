#include "tws/vekua/trig_field.hpp"

#include <cmath>
#include <stdexcept>

#include "tws/simd/kernels.hpp"

namespace tws::vekua {

namespace {
inline int bidx(Trig tx, Trig ty) { return 2 * static_cast<int>(tx) + static_cast<int>(ty); }
}  // namespace

TrigField::TrigField(double a, double b, int max_mode) : a_(a), b_(b), m_(max_mode) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("TrigField: domain sides must be positive");
    if (max_mode < 0) throw std::invalid_argument("TrigField: negative mode cap");
    const std::size_t n = (static_cast<std::size_t>(m_) + 1) * (static_cast<std::size_t>(m_) + 1);
    for (auto& blk : blocks_) blk.assign(n, 0.0);
}

double& TrigField::at(Trig tx, int mx, Trig ty, int my) {
    if (mx < 0 || mx > m_ || my < 0 || my > m_) throw std::out_of_range("TrigField::at mode");
    if ((tx == Trig::Sin && mx == 0) || (ty == Trig::Sin && my == 0))
        throw std::out_of_range("TrigField::at: sin mode 0 is identically zero");
    return blocks_[static_cast<std::size_t>(bidx(tx, ty))][idx(mx, my)];
}

double TrigField::get(Trig tx, int mx, Trig ty, int my) const {
    if (empty() || mx < 0 || mx > m_ || my < 0 || my > m_) return 0.0;
    return blocks_[static_cast<std::size_t>(bidx(tx, ty))][idx(mx, my)];
}

const std::vector<double>& TrigField::block(Trig tx, Trig ty) const {
    return blocks_[static_cast<std::size_t>(bidx(tx, ty))];
}
std::vector<double>& TrigField::block(Trig tx, Trig ty) {
    return blocks_[static_cast<std::size_t>(bidx(tx, ty))];
}

TrigField TrigField::dx() const {
    if (empty()) return {};
    TrigField r(a_, b_, m_);
    // d/dx sin(kx x) = kx cos(kx x); d/dx cos(kx x) = -kx sin(kx x)
    for (int ty = 0; ty < 2; ++ty) {
        const auto& s = blocks_[static_cast<std::size_t>(bidx(Trig::Sin, static_cast<Trig>(ty)))];
        const auto& c = blocks_[static_cast<std::size_t>(bidx(Trig::Cos, static_cast<Trig>(ty)))];
        auto& rs = r.blocks_[static_cast<std::size_t>(bidx(Trig::Sin, static_cast<Trig>(ty)))];
        auto& rc = r.blocks_[static_cast<std::size_t>(bidx(Trig::Cos, static_cast<Trig>(ty)))];
        for (int mx = 0; mx <= m_; ++mx) {
            const double kx = M_PI * mx / a_;
            for (int my = 0; my <= m_; ++my) {
                rc[idx(mx, my)] += kx * s[idx(mx, my)];
                rs[idx(mx, my)] -= kx * c[idx(mx, my)];
            }
        }
    }
    return r;
}

TrigField TrigField::dy() const {
    if (empty()) return {};
    TrigField r(a_, b_, m_);
    for (int tx = 0; tx < 2; ++tx) {
        const auto& s = blocks_[static_cast<std::size_t>(bidx(static_cast<Trig>(tx), Trig::Sin))];
        const auto& c = blocks_[static_cast<std::size_t>(bidx(static_cast<Trig>(tx), Trig::Cos))];
        auto& rs = r.blocks_[static_cast<std::size_t>(bidx(static_cast<Trig>(tx), Trig::Sin))];
        auto& rc = r.blocks_[static_cast<std::size_t>(bidx(static_cast<Trig>(tx), Trig::Cos))];
        for (int mx = 0; mx <= m_; ++mx) {
            for (int my = 0; my <= m_; ++my) {
                const double ky = M_PI * my / b_;
                rc[idx(mx, my)] += ky * s[idx(mx, my)];
                rs[idx(mx, my)] -= ky * c[idx(mx, my)];
            }
        }
    }
    return r;
}

TrigField TrigField::laplacian() const {
    if (empty()) return {};
    TrigField r = *this;
    for (auto& blk : r.blocks_) {
        for (int mx = 0; mx <= m_; ++mx) {
            const double kx2 = std::pow(M_PI * mx / a_, 2);
            for (int my = 0; my <= m_; ++my) {
                const double ky2 = std::pow(M_PI * my / b_, 2);
                blk[idx(mx, my)] *= -(kx2 + ky2);
            }
        }
    }
    return r;
}

TrigField& TrigField::axpy(double s, const TrigField& o) {
    if (empty()) {
        *this = TrigField(o.a_, o.b_, o.m_);
    }
    if (o.empty()) return *this;
    if (o.a_ != a_ || o.b_ != b_)
        throw std::invalid_argument("TrigField::axpy: domain mismatch");
    if (o.m_ > m_) {
        // grow to the larger mode cap
        TrigField grown(a_, b_, o.m_);
        for (int tx = 0; tx < 2; ++tx)
            for (int ty = 0; ty < 2; ++ty)
                for (int mx = 0; mx <= m_; ++mx)
                    for (int my = 0; my <= m_; ++my)
                        grown.blocks_[static_cast<std::size_t>(2 * tx + ty)][grown.idx(mx, my)] =
                            blocks_[static_cast<std::size_t>(2 * tx + ty)][idx(mx, my)];
        *this = std::move(grown);
    }
    if (o.m_ == m_) {
        for (int blk = 0; blk < 4; ++blk) {
            simd::axpy(s, o.blocks_[static_cast<std::size_t>(blk)].data(),
                       blocks_[static_cast<std::size_t>(blk)].data(),
                       blocks_[static_cast<std::size_t>(blk)].size());
        }
    } else {
        for (int tx = 0; tx < 2; ++tx)
            for (int ty = 0; ty < 2; ++ty)
                for (int mx = 0; mx <= o.m_; ++mx)
                    for (int my = 0; my <= o.m_; ++my)
                        blocks_[static_cast<std::size_t>(2 * tx + ty)][idx(mx, my)] +=
                            s * o.blocks_[static_cast<std::size_t>(2 * tx + ty)][o.idx(mx, my)];
    }
    return *this;
}

TrigField TrigField::scaled(double s) const {
    TrigField r = *this;
    for (auto& blk : r.blocks_) simd::scale(s, blk.data(), blk.size());
    return r;
}

double TrigField::sup_abs_coeff() const {
    double m = 0.0;
    for (const auto& blk : blocks_) m = std::max(m, simd::max_abs(blk.data(), blk.size()));
    return m;
}

double TrigField::eval(double x, double y) const {
    if (empty()) return 0.0;
    double acc = 0.0;
    for (int tx = 0; tx < 2; ++tx) {
        for (int ty = 0; ty < 2; ++ty) {
            const auto& blk = blocks_[static_cast<std::size_t>(2 * tx + ty)];
            for (int mx = 0; mx <= m_; ++mx) {
                const double ax = M_PI * mx * x / a_;
                const double fx = tx == 0 ? std::sin(ax) : std::cos(ax);
                if (fx == 0.0) continue;
                for (int my = 0; my <= m_; ++my) {
                    const double c = blk[idx(mx, my)];
                    if (c == 0.0) continue;
                    const double ay = M_PI * my * y / b_;
                    const double fy = ty == 0 ? std::sin(ay) : std::cos(ay);
                    acc += c * fx * fy;
                }
            }
        }
    }
    return acc;
}

bool TrigField::is_pure(Trig tx, Trig ty) const {
    for (int bx = 0; bx < 2; ++bx) {
        for (int by = 0; by < 2; ++by) {
            if (bx == static_cast<int>(tx) && by == static_cast<int>(ty)) continue;
            const auto& blk = blocks_[static_cast<std::size_t>(2 * bx + by)];
            for (double v : blk)
                if (v != 0.0) return false;
        }
    }
    return true;
}

TrigField TrigField::random_sine(Prng& rng, double a, double b, int max_mode) {
    TrigField f(a, b, max_mode);
    for (int mx = 1; mx <= max_mode; ++mx)
        for (int my = 1; my <= max_mode; ++my)
            f.at(Trig::Sin, mx, Trig::Sin, my) = rand_real(rng, -1.0, 1.0);
    return f;
}

double trig_pair_1d(double len, Trig t1, int m1, Trig t2, int m2) {
    if (t1 == Trig::Sin && m1 == 0) return 0.0;
    if (t2 == Trig::Sin && m2 == 0) return 0.0;
    if (t1 == t2) {
        if (m1 != m2) return 0.0;
        if (t1 == Trig::Cos && m1 == 0) return len;
        return len / 2.0;
    }
    // mixed sin/cos: vanishes for equal indices and for even m1+m2
    const int ms = t1 == Trig::Sin ? m1 : m2;  // the sine index
    const int mc = t1 == Trig::Sin ? m2 : m1;
    if (((ms + mc) & 1) == 0) return 0.0;
    return len / M_PI * 2.0 * ms /
           (static_cast<double>(ms) * ms - static_cast<double>(mc) * mc);
}

double TrigField::inner(const TrigField& f, const TrigField& g) {
    if (f.empty() || g.empty()) return 0.0;
    if (f.a_ != g.a_ || f.b_ != g.b_)
        throw std::invalid_argument("TrigField::inner: domain mismatch");
    double acc = 0.0;
    const int mf = f.m_, mg = g.m_;
    for (int t1x = 0; t1x < 2; ++t1x) {
        for (int t1y = 0; t1y < 2; ++t1y) {
            const auto& fb = f.blocks_[static_cast<std::size_t>(2 * t1x + t1y)];
            for (int t2x = 0; t2x < 2; ++t2x) {
                for (int t2y = 0; t2y < 2; ++t2y) {
                    const auto& gb = g.blocks_[static_cast<std::size_t>(2 * t2x + t2y)];
                    const bool diag_x = t1x == t2x;
                    const bool diag_y = t1y == t2y;
                    if (diag_x && diag_y) {
                        // orthogonal families: plain weighted dot over shared modes
                        for (int mx = 0; mx <= std::min(mf, mg); ++mx) {
                            const double wx = trig_pair_1d(f.a_, static_cast<Trig>(t1x), mx,
                                                           static_cast<Trig>(t2x), mx);
                            if (wx == 0.0) continue;
                            for (int my = 0; my <= std::min(mf, mg); ++my) {
                                const double c1 = fb[f.idx(mx, my)];
                                if (c1 == 0.0) continue;
                                const double c2 = gb[g.idx(mx, my)];
                                if (c2 == 0.0) continue;
                                const double wy = trig_pair_1d(f.b_, static_cast<Trig>(t1y), my,
                                                               static_cast<Trig>(t2y), my);
                                acc += c1 * c2 * wx * wy;
                            }
                        }
                    } else {
                        for (int mx = 0; mx <= mf; ++mx) {
                            for (int my = 0; my <= mf; ++my) {
                                const double c1 = fb[f.idx(mx, my)];
                                if (c1 == 0.0) continue;
                                for (int nx = 0; nx <= mg; ++nx) {
                                    const double wx =
                                        trig_pair_1d(f.a_, static_cast<Trig>(t1x), mx,
                                                     static_cast<Trig>(t2x), nx);
                                    if (wx == 0.0) continue;
                                    for (int ny = 0; ny <= mg; ++ny) {
                                        const double c2 = gb[g.idx(nx, ny)];
                                        if (c2 == 0.0) continue;
                                        const double wy =
                                            trig_pair_1d(f.b_, static_cast<Trig>(t1y), my,
                                                         static_cast<Trig>(t2y), ny);
                                        if (wy == 0.0) continue;
                                        acc += c1 * c2 * wx * wy;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return acc;
}

}  // namespace tws::vekua
