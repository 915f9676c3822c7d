#pragma once

// Dense univariate polynomial over a field K. K must be a value type with
// K() == 0, K(1) == 1, exact +,-,*,/ and ==, and an is_zero() member.
// The same template serves Q (K = Rational) and Q(t) (K = RationalFunction).

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "consq/error.hpp"

namespace consq {

template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(const K& scalar) : c_{scalar} { trim(); }  // NOLINT

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(K(1)); }
    static Polynomial x() { return Polynomial(std::vector<K>{K(), K(1)}); }
    static Polynomial monomial(int deg, const K& coeff) {
        std::vector<K> v(deg + 1, K());
        v[deg] = coeff;
        return Polynomial(std::move(v));
    }

    // degree of the zero polynomial is the sentinel -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

    const K& coeff(int i) const {
        static const K kZero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[i];
    }
    const K& leading() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<K>& coefficients() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }
    bool is_even() const {
        for (size_t i = 1; i < c_.size(); i += 2)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] - b.c_[i];
        }
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<K> r = c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) {
        if (s.is_zero()) return Polynomial();
        std::vector<K> r = a.c_;
        for (auto& v : r) v = s * v;
        return Polynomial(std::move(r));
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    // f = q*g + r with deg r < deg g
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
        if (g.is_zero()) throw DivisionByZero("polynomial division");
        Polynomial r = f;
        int dg = g.degree();
        if (r.degree() < dg) return {Polynomial(), r};
        std::vector<K> q(r.degree() - dg + 1, K());
        const K& lg = g.leading();
        while (!r.is_zero() && r.degree() >= dg) {
            int shift = r.degree() - dg;
            K c = r.leading() / lg;
            q[shift] = c;
            std::vector<K> rr = r.c_;
            for (int j = 0; j <= dg; ++j) rr[shift + j] = rr[shift + j] - c * g.c_[j];
            rr.resize(r.c_.size() - 1);
            r = Polynomial(std::move(rr));
        }
        return {Polynomial(std::move(q)), r};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> r(c_.size() - 1, K());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    K evaluate(const K& x) const {
        K r{};
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Evaluation of coefficients into another structure via a mapping functor,
    // e.g. specializing Q(t) coefficients at t = tau.
    template <class F>
    auto map_coefficients(F&& f) const -> Polynomial<decltype(f(c_[0]))> {
        using K2 = decltype(f(c_[0]));
        std::vector<K2> r;
        r.reserve(c_.size());
        for (const auto& v : c_) r.push_back(f(v));
        return Polynomial<K2>(std::move(r));
    }

    Polynomial compose(const Polynomial& g) const {
        Polynomial r;
        for (size_t i = c_.size(); i-- > 0;) r = r * g + Polynomial(c_[i]);
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = one();
        Polynomial b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Polynomial reflected() const {  // f(-x)
        std::vector<K> r = c_;
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Polynomial(std::move(r));
    }

    Polynomial reversed() const {  // x^deg * f(1/x)
        std::vector<K> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    Polynomial make_monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        return inv * *this;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[i] << ")";
            if (i == 1) os << "*" << var;
            if (i > 1) os << "*" << var << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;  // c_[i] = coefficient of x^i; empty means zero
};

// Generic Euclidean gcd, monic result. Adequate for small degrees; Q-coefficient
// callers should prefer gcd_rational_poly() which runs a modular algorithm.
template <class K>
Polynomial<K> gcd_euclid(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.make_monic();
}

template <class K>
K power_of(const K& base, int e) {
    K r(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

// Resultant via the Euclidean remainder sequence (K a field).
template <class K>
K resultant(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero() || b.is_zero()) return K();
    K acc(1);
    bool negate = false;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            K lb = b.leading();
            K r = acc * power_of(lb, da);
            return negate ? -r : r;
        }
        auto [q, r] = divrem(a, b);
        if (r.is_zero()) return K();
        int dr = r.degree();
        // res(a,b) = (-1)^(da*db) res(b,a); res(b,a) = lb^(da-dr) res(b,r)
        if ((da & 1) && (db & 1)) negate = !negate;
        acc = acc * power_of(b.leading(), da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

// Writes a monic even-degree P as Q^2 - R with Q monic, deg Q = n and
// deg R <= n-1, by matching coefficients from the top down.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> mestre_sqrt(const Polynomial<K>& P) {
    if (P.is_zero() || !P.is_monic()) throw NotMonic("mestre_sqrt needs a monic input");
    int d = P.degree();
    if (d % 2 != 0) throw OddDegree("mestre_sqrt needs even degree");
    int n = d / 2;
    std::vector<K> q(n + 1, K());
    q[n] = K(1);
    K two(2);
    for (int i = n - 1; i >= 0; --i) {
        // coefficient of x^(n+i) in Q^2 equals P's
        K acc = P.coeff(n + i);
        for (int j = i + 1; j < n; ++j) {
            int k = n + i - j;
            if (k <= i || k >= n) continue;
            if (k < j) break;  // each unordered pair once
            acc = (k == j) ? acc - q[j] * q[j] : acc - two * q[j] * q[k];
        }
        q[i] = acc / two;
    }
    Polynomial<K> Q(std::move(q));
    Polynomial<K> R = Q * Q - P;
    if (R.degree() > n - 1) throw InternalIdentityFailure("mestre_sqrt remainder too large");
    return {std::move(Q), std::move(R)};
}

// Exact polynomial square root: returns G with G^2 == F when one exists over K.
// Sign convention: the leading coefficient of G is the canonical square root
// of F's leading coefficient (field_sqrt), so it carries a positive sign.
template <class K>
std::optional<Polynomial<K>> perfect_square_root(const Polynomial<K>& F) {
    if (F.is_zero()) return Polynomial<K>();
    int d = F.degree();
    if (d % 2 != 0) return std::nullopt;
    int n = d / 2;
    auto lead = field_sqrt(F.leading());
    if (!lead) return std::nullopt;
    std::vector<K> g(n + 1, K());
    g[n] = *lead;
    K twol = K(2) * g[n];
    for (int i = n - 1; i >= 0; --i) {
        K acc = F.coeff(n + i);
        for (int j = i + 1; j < n; ++j) {
            int k = n + i - j;
            if (k <= i || k >= n) continue;
            if (k < j) break;
            acc = (k == j) ? acc - g[j] * g[j] : acc - K(2) * g[j] * g[k];
        }
        g[i] = acc / twol;
    }
    Polynomial<K> G(std::move(g));
    if (!(G * G == F)) return std::nullopt;
    return G;
}

}  // namespace consq
