#include "tws/vekua/plate_config.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tws {

void PlateConfig::validate() const {
    if (!(mu > 0)) throw std::invalid_argument("PlateConfig: mu must be positive");
    if (!(3 * lambda + 2 * mu > 0))
        throw std::invalid_argument("PlateConfig: 3*lambda + 2*mu must be positive");
    if (!(h > 0)) throw std::invalid_argument("PlateConfig: h must be positive");
    if (!(a > 0 && b > 0)) throw std::invalid_argument("PlateConfig: domain sides must be positive");
    Rational nu = poisson_nu();
    if (!(nu > -1 && 2 * nu < 1))
        throw std::invalid_argument("PlateConfig: nu outside (-1, 1/2)");
}

PlateConfig PlateConfig::from_lame(Rational lambda, Rational mu, Rational h, Rational gamma,
                                   Rational a, Rational b) {
    PlateConfig c;
    c.lambda = std::move(lambda);
    c.mu = std::move(mu);
    c.h = std::move(h);
    c.gamma = std::move(gamma);
    c.a = std::move(a);
    c.b = std::move(b);
    c.validate();
    return c;
}

PlateConfig PlateConfig::from_engineering(const Rational& E, const Rational& nu, Rational h,
                                          Rational gamma, Rational a, Rational b) {
    Rational lambda = E * nu / ((1 + nu) * (1 - 2 * nu));
    Rational mu = E / (2 * (1 + nu));
    return from_lame(std::move(lambda), std::move(mu), std::move(h), std::move(gamma),
                     std::move(a), std::move(b));
}

namespace {

Rational field_rational(const nlohmann::json& j, const char* name) {
    const auto& v = j.at(name);
    if (v.is_string()) return rational_from_decimal(v.get<std::string>());
    return rational_from_decimal(v.dump());
}

bool has(const nlohmann::json& j, const char* name) { return j.contains(name); }

}  // namespace

PlateConfig PlateConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Rational h = has(j, "h") ? field_rational(j, "h") : Rational(1);
    Rational gamma = has(j, "gamma") ? field_rational(j, "gamma") : Rational(0);
    Rational a = has(j, "a") ? field_rational(j, "a") : Rational(1);
    Rational b = has(j, "b") ? field_rational(j, "b") : Rational(1);
    if (has(j, "lambda") && has(j, "mu")) {
        return from_lame(field_rational(j, "lambda"), field_rational(j, "mu"), h, gamma, a, b);
    }
    if (has(j, "E") && has(j, "nu")) {
        return from_engineering(field_rational(j, "E"), field_rational(j, "nu"), h, gamma, a, b);
    }
    throw std::invalid_argument("PlateConfig: need either lambda/mu or E/nu");
}

std::string PlateConfig::to_json() const {
    nlohmann::json j;
    j["lambda"] = to_string(lambda);
    j["mu"] = to_string(mu);
    j["h"] = to_string(h);
    j["gamma"] = to_string(gamma);
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["E"] = to_string(youngs_E());
    j["nu"] = to_string(poisson_nu());
    j["D"] = to_string(rigidity_D());
    return j.dump();
}

}  // namespace tws
