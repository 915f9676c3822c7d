#pragma once

// Arbitrary-precision signed integer, a value-semantics wrapper around GMP's
// mpz layer. All arithmetic is exact; there is no overflow anywhere.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmp.h>

#include "consq/error.hpp"

namespace consq {

class Integer {
public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    explicit Integer(std::string_view decimal);

    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    std::string to_decimal() const;

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }

    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer abs() const {
        Integer r;
        mpz_abs(r.z_, z_);
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer& operator+=(const Integer& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }
    Integer& operator-=(const Integer& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }
    Integer& operator*=(const Integer& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    // Truncated division and remainder; b must be nonzero.
    friend Integer div_trunc(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw DivisionByZero("integer division");
        Integer r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer mod_trunc(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw DivisionByZero("integer remainder");
        Integer r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    // Exact division; throws InternalIdentityFailure if b does not divide a.
    friend Integer div_exact(const Integer& a, const Integer& b);
    friend bool divides(const Integer& b, const Integer& a) {
        if (b.is_zero()) return a.is_zero();
        return mpz_divisible_p(a.z_, b.z_) != 0;
    }
    // Nonnegative remainder mod m (m > 0).
    friend Integer mod_floor(const Integer& a, const Integer& m) {
        Integer r;
        mpz_mod(r.z_, a.z_, m.z_);
        return r;
    }

    friend Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    friend std::optional<Integer> invert_mod(const Integer& a, const Integer& m) {
        Integer r;
        if (mpz_invert(r.z_, a.z_, m.z_) == 0) return std::nullopt;
        return r;
    }

    Integer pow(unsigned long e) const {
        Integer r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    std::optional<Integer> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        if (mpz_perfect_square_p(z_) == 0) return std::nullopt;
        Integer r;
        mpz_sqrt(r.z_, z_);
        return r;
    }

    // floor(sqrt(value)); requires value >= 0
    Integer isqrt() const {
        if (sign() < 0) throw Error("isqrt of negative integer");
        Integer r;
        mpz_sqrt(r.z_, z_);
        return r;
    }

    // log of |value|; exact enough for height bookkeeping, valid far beyond
    // the double range. Requires value != 0.
    double log_abs() const;

    std::uint64_t mod_u64(std::uint64_t m) const;  // nonnegative residue
    static Integer from_u64(std::uint64_t v);
    std::optional<long> to_long() const {
        if (!mpz_fits_slong_p(z_)) return std::nullopt;
        return mpz_get_si(z_);
    }
    size_t bit_size() const { return mpz_sizeinbase(z_, 2); }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
    mpz_t z_;
};

}  // namespace consq
