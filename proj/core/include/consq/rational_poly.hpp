#pragma once

// Fast algorithms specific to polynomials with rational coefficients:
// a modular gcd (the generic Euclidean remainder sequence blows up on the
// coefficient sizes this project produces) and exact rational root finding
// via roots mod p, Hensel lifting and rational reconstruction.

#include <vector>

#include "consq/polynomial.hpp"
#include "consq/rational.hpp"

namespace consq {

// Primitive integer image of f (denominators cleared, content removed,
// positive leading coefficient). f must be nonzero.
std::vector<Integer> primitive_integer_poly(const Polynomial<Rational>& f);

// Monic gcd over Q, computed mod word-size primes with CRT reconstruction
// and an exact divisibility certificate.
Polynomial<Rational> gcd_rational_poly(const Polynomial<Rational>& f,
                                       const Polynomial<Rational>& g);

// All rational roots of f (f nonzero), each exactly verified. Multiplicities
// are not reported.
std::vector<Rational> rational_roots(const Polynomial<Rational>& f);

}  // namespace consq
