#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tws/prng.hpp"

namespace tws::vekua {

enum class Trig : int { Sin = 0, Cos = 1 };

// Finite combination of products T(mx pi x / a) * T(my pi y / b), T in
// {sin, cos}, on the rectangle (0,a) x (0,b). Closed under d/dx, d/dy; inner
// products evaluate by the closed-form integrals of the trig system, so
// quadratic forms carry no quadrature error.
class TrigField {
   public:
    TrigField() = default;
    TrigField(double a, double b, int max_mode);

    double a() const { return a_; }
    double b() const { return b_; }
    int max_mode() const { return m_; }
    bool empty() const { return m_ == 0 && blocks_[0].empty(); }

    double& at(Trig tx, int mx, Trig ty, int my);
    double get(Trig tx, int mx, Trig ty, int my) const;

    TrigField dx() const;
    TrigField dy() const;
    TrigField laplacian() const;  // type-preserving: -(kx^2+ky^2) per mode

    TrigField& axpy(double s, const TrigField& o);
    TrigField scaled(double s) const;
    friend TrigField operator+(TrigField x, const TrigField& y) { return x.axpy(1.0, y); }
    friend TrigField operator-(TrigField x, const TrigField& y) { return x.axpy(-1.0, y); }

    double sup_abs_coeff() const;
    double eval(double x, double y) const;
    bool is_pure(Trig tx, Trig ty) const;  // all coefficients in one block

    // Random field with sin x sin support on modes 1..max_mode, coefficients
    // uniform in [-1, 1].
    static TrigField random_sine(Prng& rng, double a, double b, int max_mode);

    static double inner(const TrigField& f, const TrigField& g);

    const std::vector<double>& block(Trig tx, Trig ty) const;
    std::vector<double>& block(Trig tx, Trig ty);

   private:
    double a_ = 1.0;
    double b_ = 1.0;
    int m_ = 0;  // mode indices run 0..m_ (sin index 0 is identically zero)
    std::array<std::vector<double>, 4> blocks_;  // [2*tx + ty], row-major (mx, my)

    std::size_t idx(int mx, int my) const {
        return static_cast<std::size_t>(mx) * (static_cast<std::size_t>(m_) + 1) +
               static_cast<std::size_t>(my);
    }
};

// Int_0^len T1(m1 pi s / len) T2(m2 pi s / len) ds, exact closed form.
double trig_pair_1d(double len, Trig t1, int m1, Trig t2, int m2);

}  // namespace tws::vekua
