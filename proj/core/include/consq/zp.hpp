#pragma once

// Arithmetic in Z/pZ for word-size primes, plus dense polynomial arithmetic
// and root finding mod p. Internal machinery behind the modular polynomial
// gcd and the rational root search; exposed for direct testing.

#include <cstdint>
#include <vector>

#include "consq/integer.hpp"

namespace consq::modp {

using u64 = std::uint64_t;

u64 add(u64 a, u64 b, u64 p);
u64 sub(u64 a, u64 b, u64 p);
u64 mul(u64 a, u64 b, u64 p);
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

bool is_prime_u64(u64 n);
// Deterministic descending sequence of ~62-bit primes: prime_below(k) is the
// (k+1)-th prime below 2^62.
u64 nth_prime_below_2_62(unsigned k);

// Dense polynomial mod p: c[i] is the x^i coefficient; no trailing zeros.
using Poly = std::vector<u64>;

int degree(const Poly& f);
void normalize(Poly& f);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
// divrem: returns {q, r} with f = q*g + r, deg r < deg g; g nonzero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g, u64 p);
Poly make_monic(const Poly& f, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic
Poly powmod(const Poly& base, const Integer& e, const Poly& mod, u64 p);
Poly derivative(const Poly& f, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);

// All roots of f in Z/pZ (each listed once), via x^p - x splitting.
std::vector<u64> roots(const Poly& f, u64 p);

}  // namespace consq::modp
