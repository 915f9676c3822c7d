#pragma once

// Binary quartic forms F(p,w) = A p^4 + B p^3 w + C p^2 w^2 + D p w^3 + E w^4
// with their classical SL2-invariants I, J and discriminant.

#include <optional>

#include "consq/polynomial.hpp"

namespace consq {

template <class K>
struct BinaryQuartic {
    K A, B, C, D, E;

    bool all_zero() const {
        return A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero() && E.is_zero();
    }
    K evaluate(const K& p, const K& w) const {
        K p2 = p * p, w2 = w * w;
        return A * p2 * p2 + B * p2 * p * w + C * p2 * w2 + D * p * w2 * w + E * w2 * w2;
    }
    Polynomial<K> dehomogenized() const {  // F(p, 1)
        return Polynomial<K>(std::vector<K>{E, D, C, B, A});
    }
};

// I and J of the quartic; valid over any commutative ring.
template <class R>
struct QuarticIJ {
    R I, J;
};

template <class R>
QuarticIJ<R> quartic_ij(const R& A, const R& B, const R& C, const R& D, const R& E) {
    R twelve(12), three(3), seventy_two(72), nine(9), twenty_seven(27), two(2);
    R I = twelve * A * E - three * B * D + C * C;
    R J = seventy_two * A * C * E + nine * B * C * D - twenty_seven * A * D * D -
          twenty_seven * B * B * E - two * C * C * C;
    return {I, J};
}

template <class K>
struct QuarticInvariants {
    K I, J, disc;  // disc = (4 I^3 - J^2)/27
};

template <class K>
QuarticInvariants<K> quartic_invariants(const BinaryQuartic<K>& F) {
    auto ij = quartic_ij<K>(F.A, F.B, F.C, F.D, F.E);
    K disc = (K(4) * ij.I * ij.I * ij.I - ij.J * ij.J) / K(27);
    return {ij.I, ij.J, disc};
}

// Independent discriminant route: Res_p(F(p,1), dF/dp) / A, for quartics with
// A != 0. Used as the oracle against the I/J formula.
template <class K>
K quartic_disc_resultant(const BinaryQuartic<K>& F) {
    if (F.A.is_zero()) throw Error("resultant discriminant needs A != 0");
    Polynomial<K> f = F.dehomogenized();
    K res = resultant(f, f.derivative());
    return res / F.A;
}

// Exact square root of a binary quartic as a binary quadratic
// a p^2 + b p w + c w^2, when one exists over K.
template <class K>
std::optional<std::array<K, 3>> perfect_square_root(const BinaryQuartic<K>& F) {
    if (F.all_zero()) return std::array<K, 3>{K(), K(), K()};
    if (!F.A.is_zero()) {
        auto a = field_sqrt(F.A);
        if (!a) return std::nullopt;
        K b = F.B / (K(2) * *a);
        K c = (F.C - b * b) / (K(2) * *a);
        if (!(K(2) * b * c == F.D) || !(c * c == F.E)) return std::nullopt;
        return std::array<K, 3>{*a, b, c};
    }
    if (!F.B.is_zero()) return std::nullopt;  // A = 0 forces B = 0 in a square
    if (!F.C.is_zero()) {
        auto b = field_sqrt(F.C);
        if (!b) return std::nullopt;
        K c = F.D / (K(2) * *b);
        if (!(c * c == F.E)) return std::nullopt;
        return std::array<K, 3>{K(), *b, c};
    }
    if (!F.D.is_zero()) return std::nullopt;
    auto c = field_sqrt(F.E);
    if (!c) return std::nullopt;
    return std::array<K, 3>{K(), K(), *c};
}

}  // namespace consq
