#pragma once

// Sample-and-reconstruct search for Q(t)-rational roots of a univariate
// polynomial D with Q(t) coefficients: specialize t at many rational points,
// find the rational roots of each specialization, reconstruct candidate roots
// as rational functions within a degree bound, and verify each candidate
// symbolically before returning it.

#include <vector>

#include "consq/rational_function.hpp"

namespace consq {

struct RootInterpolationOptions {
    int num_degree_bound = 8;
    int den_degree_bound = 8;
    int extra_samples = 3;       // held-out verification points
    int min_rooted_samples = 3;  // fewer rooted specializations than this => NoRationalRoot
    unsigned seed = 20240915;
};

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
Polynomial<Rational> lagrange_interpolate(const std::vector<Rational>& xs,
                                          const std::vector<Rational>& ys);

// Rational-function reconstruction: find num/den with the given degree bounds
// through the samples, if one exists (homogeneous linear solve over Q).
std::optional<RationalFunction> reconstruct_rational_function(
    const std::vector<Rational>& xs, const std::vector<Rational>& ys,
    int num_degree_bound, int den_degree_bound);

// All Q(t)-rational roots of D found within the bounds.
// Throws NoRationalRoot when several specializations have no rational root,
// DegreeBoundExceeded when root branches exist pointwise but no candidate
// within the bounds verifies symbolically.
std::vector<RationalFunction> rational_root_interpolation(
    const Polynomial<RationalFunction>& D,
    const RootInterpolationOptions& opt = RootInterpolationOptions{});

}  // namespace consq
