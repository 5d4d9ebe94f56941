#include "trichain/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace trichain {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // validate shape: [+-]digits[/digits]
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
    if (i < s.size()) {
        if (s[i] != '/') throw std::invalid_argument("bad rational literal: " + s);
        ++i;
        size_t den = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den; }
        if (den == 0 || i != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    }
    Rational q(s[0] == '+' ? s.substr(1) : s);  // mpq_set_str rejects a leading '+'
    q.canonicalize();
    if (sgn(q) != 0 && q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

std::string to_string(const GaussianRational& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    std::string im = to_string(z.im) + "i";
    if (sgn(z.re) == 0) return im;
    if (sgn(z.im) > 0) return to_string(z.re) + "+" + im;
    return to_string(z.re) + im;  // im part carries its own '-'
}

GaussianRational gaussian_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty point coordinate");
    // split at the last top-level '+'/'-' that is not the leading sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;
    bool has_i = s.back() == 'i';
    if (!has_i) {
        if (split != std::string::npos) throw std::invalid_argument("bad coordinate: " + s);
        return GaussianRational(rational_from_string(s));
    }
    std::string body = s.substr(0, s.size() - 1);
    if (split == std::string::npos) {
        if (body.empty() || body == "+") return {Rational(0), Rational(1)};
        if (body == "-") return {Rational(0), Rational(-1)};
        return {Rational(0), rational_from_string(body)};
    }
    std::string re = s.substr(0, split);
    std::string im = body.substr(split);  // includes sign
    if (im == "+" ) return {rational_from_string(re), Rational(1)};
    if (im == "-") return {rational_from_string(re), Rational(-1)};
    return {rational_from_string(re), rational_from_string(im)};
}

} // namespace trichain
