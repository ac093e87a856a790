#include "tws/legendre/legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "tws/simd/kernels.hpp"

namespace tws {

double eval_p_checked(int n, double x, double tol) {
    if (std::fabs(x) > 1.0 + tol) {
        throw std::domain_error("eval_p: argument outside [-1,1]");
    }
    if (x > 1.0) x = 1.0;
    if (x < -1.0) x = -1.0;
    return eval_p(n, x);
}

std::vector<Rational> q_legendre_coeffs(int k) {
    if (k < 0) throw std::invalid_argument("q_legendre_coeffs: k must be >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(k) + 3, Rational(0));
    auto add = [&](int n, const Rational& v) {
        if (n >= 0) c[static_cast<std::size_t>(n)] += v;
    };
    if (k == 0) {
        add(2, Rational(1, 3));
        add(0, Rational(1) - Rational(1, 3));
        add(1, Rational(1));
        return c;  // (p2-p0)/3 + p0 + p1
    }
    if (k == 1) {
        add(3, Rational(1, 5));
        add(1, Rational(-1, 5) - 1);
        add(0, Rational(-1));
        return c;
    }
    add(k + 2, Rational(1, 2 * k + 3));
    add(k, -Rational(1, 2 * k + 3) - Rational(1, 2 * k - 1));
    add(k - 2, Rational(1, 2 * k - 1));
    return c;
}

namespace {

QuadRule compute_rule(int n) {
    QuadRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-based initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p = eval_p(n, x);
            double dp = eval_p_deriv(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double dp = eval_p_deriv(n, x);
        r.nodes[static_cast<std::size_t>(i)] = x;
        r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    static std::map<int, QuadRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double integrate(const std::function<double(double)>& f, int n_nodes) {
    const QuadRule& r = gauss_legendre(n_nodes);
    std::vector<double> fx(r.nodes.size());
    for (std::size_t i = 0; i < r.nodes.size(); ++i) fx[i] = f(r.nodes[i]);
    return simd::dot(fx.data(), r.weights.data(), fx.size());
}

int nodes_for_degree(int degree) { return (degree + 3) / 2 + 2; }

std::vector<double> moments_with_rule(const std::function<double(double)>& f, int m_max, double h,
                                      int poly_degree, int n_nodes) {
    if (m_max < 0) throw std::invalid_argument("moments: m_max must be >= 0");
    if (poly_degree + m_max > 2 * n_nodes - 1) {
        std::ostringstream os;
        os << "moments: " << n_nodes << "-node rule is exact to degree " << (2 * n_nodes - 1)
           << " but the integrand has declared degree " << (poly_degree + m_max);
        throw std::invalid_argument(os.str());
    }
    const QuadRule& r = gauss_legendre(n_nodes);
    const std::size_t nq = r.nodes.size();
    std::vector<double> fw(nq);
    for (std::size_t i = 0; i < nq; ++i) fw[i] = f(h * r.nodes[i]) * r.weights[i] * h;
    std::vector<double> out(static_cast<std::size_t>(m_max) + 1);
    std::vector<double> pm(nq);
    for (int m = 0; m <= m_max; ++m) {
        simd::legendre_batch(m, r.nodes.data(), pm.data(), nq);
        out[static_cast<std::size_t>(m)] = simd::dot(fw.data(), pm.data(), nq);
    }
    return out;
}

std::vector<double> moments(const std::function<double(double)>& f, int m_max, double h,
                            int poly_degree) {
    return moments_with_rule(f, m_max, h, poly_degree,
                             nodes_for_degree(poly_degree + m_max));
}

double LegendreSeries::eval(double z) const {
    if (coeffs.empty()) return 0.0;
    double x = scaled_arg(z);
    auto p = eval_p_all(static_cast<int>(coeffs.size()) - 1, x);
    return simd::dot(coeffs.data(), p.data(), coeffs.size());
}

std::string LegendreSeries::to_json() const {
    nlohmann::json j;
    j["h"] = h;
    j["offset"] = offset;
    j["use_offset"] = use_offset;
    j["coeffs"] = coeffs;
    return j.dump();
}

LegendreSeries LegendreSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LegendreSeries s;
    s.h = j.at("h").get<double>();
    s.offset = j.value("offset", 0.0);
    s.use_offset = j.value("use_offset", s.offset != 0.0);
    s.coeffs = j.at("coeffs").get<std::vector<double>>();
    return s;
}

}  // namespace tws
