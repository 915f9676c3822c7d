#include "consq/rational.hpp"

#include <cmath>
#include <ostream>

namespace consq {

void Rational::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
}

Rational Rational::parse(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(s));
    Integer n{s.substr(0, slash)};
    Integer d{s.substr(slash + 1)};
    if (d.is_zero()) throw ParseError("zero denominator in \"" + std::string(s) + "\"");
    if (d.sign() < 0) throw ParseError("denominator must be positive in \"" + std::string(s) + "\"");
    return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    Rational r(Integer(num_.pow(static_cast<unsigned long>(e))),
               Integer(den_.pow(static_cast<unsigned long>(e))));
    return r;
}

double Rational::to_double() const {
    if (is_zero()) return 0.0;
    double ln = num_.abs().log_abs() - den_.log_abs();
    double v = std::exp(ln);
    return sign() < 0 ? -v : v;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::optional<Rational> is_square(const Rational& a) {
    if (a.sign() < 0) return std::nullopt;
    auto rn = a.num().sqrt_exact();
    if (!rn) return std::nullopt;
    auto rd = a.den().sqrt_exact();
    if (!rd) return std::nullopt;
    return Rational(std::move(*rn), std::move(*rd));
}

double log_height(const Rational& a) {
    if (a.is_zero()) throw ZeroHeightInput("log_height(0)");
    double ln = a.num().abs().log_abs();
    double ld = a.den().log_abs();
    return std::max(ln, ld) < 0 ? 0.0 : std::max(ln, ld);
}

}  // namespace consq
