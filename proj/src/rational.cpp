#include "tws/rational.hpp"

#include <cctype>

namespace tws {

Rational rational_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_decimal: empty string");
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = -1;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (frac_digits >= 0)
                throw std::invalid_argument("rational_from_decimal: bad literal " + s);
            frac_digits = 0;
        } else if (c == '/') {
            // Plain rational literal "p/q".
            Rational r(s);
            r.canonicalize();
            return r;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else if (c == 'e' || c == 'E') {
            break;  // handled below
        } else {
            throw std::invalid_argument("rational_from_decimal: bad literal " + s);
        }
    }
    long exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        exp10 = std::stol(s.substr(pos + 1));
    }
    if (digits.empty()) throw std::invalid_argument("rational_from_decimal: bad literal " + s);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    long shift = exp10 - (frac_digits > 0 ? frac_digits : 0);
    mpz_class den(1);
    mpz_class ten(10);
    if (shift >= 0) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        num *= p;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const GRat& g) {
    if (g.im == 0) return g.re.get_str();
    std::string s = "(" + g.re.get_str();
    s += (g.im < 0) ? "-" : "+";
    Rational ai = abs(g.im);
    s += ai.get_str() + "i)";
    return s;
}

}  // namespace tws
