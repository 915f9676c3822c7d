#pragma once

// Exact rational scalar: normalized num/den with den > 0 and gcd(|num|, den) = 1.
// Canonical text form is "num/den", with "/den" omitted when den = 1 and the
// sign carried by the numerator. That string format is the wire contract for
// JSON and CLI input.

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "consq/integer.hpp"

namespace consq {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(long n, long d) : num_(n), den_(d) { normalize(); }
    explicit Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational parse(std::string_view s);
    std::string to_string() const;

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }
    Rational abs() const { return Rational(unchecked{}, num_.abs(), den_); }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("rational division");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    Rational pow(long e) const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    struct unchecked {};
    Rational(unchecked, Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Integer num_, den_;
};

// Returns the nonnegative square root when the value is a square in Q.
std::optional<Rational> is_square(const Rational& a);

// Naive multiplicative height: log max(|num|, den). Requires a != 0.
double log_height(const Rational& a);

// field_sqrt hook used by generic polynomial square-root code.
inline std::optional<Rational> field_sqrt(const Rational& a) { return is_square(a); }

}  // namespace consq
