#include "consq/rational_function.hpp"

#include <ostream>

namespace consq {

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator polynomial");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = gcd_rational_poly(num_, den_);
        if (g.degree() > 0) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
    }
    if (!den_.is_monic()) {
        Rational inv = Rational(1) / den_.leading();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(1);
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1);
    RationalFunction b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Rational RationalFunction::evaluate(const Rational& tau) const {
    Rational d = den_.evaluate(tau);
    if (d.is_zero()) throw DivisionByZero("specialization hits a denominator zero");
    return num_.evaluate(tau) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string("t");
    return "(" + num_.to_string("t") + ") / (" + den_.to_string("t") + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& v) {
    return os << v.to_string();
}

std::optional<RationalFunction> field_sqrt(const RationalFunction& a) {
    if (a.is_zero()) return RationalFunction();
    auto rn = perfect_square_root(a.num());
    if (!rn) return std::nullopt;
    auto rd = perfect_square_root(a.den());
    if (!rd) return std::nullopt;
    return RationalFunction(std::move(*rn), std::move(*rd));
}

Polynomial<Rational> specialize(const Polynomial<RationalFunction>& f, const Rational& tau) {
    return f.map_coefficients([&](const RationalFunction& c) { return c.evaluate(tau); });
}

Polynomial<RationalFunction> lift_to_qt(const Polynomial<Rational>& f) {
    return f.map_coefficients([](const Rational& c) { return RationalFunction(c); });
}

}  // namespace consq
