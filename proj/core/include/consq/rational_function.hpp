#pragma once

// The field Q(t): normalized quotient num/den of polynomials over Q with a
// monic denominator and gcd(num, den) = 1. Unique representation makes exact
// regression against printed closed forms well-defined.

#include <optional>
#include <string>

#include "consq/polynomial.hpp"
#include "consq/rational.hpp"
#include "consq/rational_poly.hpp"

namespace consq {

class RationalFunction {
public:
    using Poly = Polynomial<Rational>;

    RationalFunction() : num_(), den_(Poly::one()) {}
    RationalFunction(long v) : num_(Rational(v)), den_(Poly::one()) {}  // NOLINT
    RationalFunction(const Rational& v) : num_(v), den_(Poly::one()) {}  // NOLINT
    RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::one()) {}  // NOLINT
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RationalFunction t() { return RationalFunction(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }
    Rational constant_value() const {
        if (!is_constant()) throw Error("not a constant rational function");
        return num_.is_zero() ? Rational(0) : num_.coeff(0);
    }

    RationalFunction operator-() const { return RationalFunction(unchecked{}, -num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        // cross-reduce before multiplying to keep gcd inputs small
        RationalFunction x(unchecked{}, a.num_, b.den_);
        RationalFunction y(unchecked{}, b.num_, a.den_);
        x.normalize();
        y.normalize();
        return RationalFunction(unchecked{}, x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division");
        if (a.is_zero()) return RationalFunction();
        RationalFunction x(a.num_, b.num_);
        RationalFunction y(unchecked{}, b.den_, a.den_);
        y.normalize();
        return RationalFunction(unchecked{}, x.num_ * y.num_, normalized_product(x.den_, y.den_));
    }
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction pow(long e) const;
    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Evaluation at t = tau; throws DivisionByZero when tau hits the denominator.
    Rational evaluate(const Rational& tau) const;
    bool denominator_vanishes_at(const Rational& tau) const {
        return den_.evaluate(tau).is_zero();
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& v);

private:
    struct unchecked {};
    RationalFunction(unchecked, Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
    static Poly normalized_product(const Poly& a, const Poly& b) { return a * b; }
    void normalize();

    Poly num_, den_;
};

// Square root in Q(t) when it exists: both parts of the canonical form must be
// polynomial squares. The result's numerator has a positive leading rational.
std::optional<RationalFunction> field_sqrt(const RationalFunction& a);

// Coefficient-wise specialization t = tau of a polynomial over Q(t).
Polynomial<Rational> specialize(const Polynomial<RationalFunction>& f, const Rational& tau);

// Embeds a polynomial in t as a Q(t)-scalar polynomial is implicit; this lifts
// a polynomial over Q into a polynomial over Q(t) coefficient-wise.
Polynomial<RationalFunction> lift_to_qt(const Polynomial<Rational>& f);

}  // namespace consq
