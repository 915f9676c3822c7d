#pragma once

// Sparse polynomials in the three parametrization variables p, q, w with
// coefficients in an arbitrary field K (Q or Q(t)). Exponents are kept in the
// fixed variable order p > q > w; no zero coefficient is ever stored.

#include <array>
#include <compare>
#include <map>
#include <sstream>

#include "consq/error.hpp"

namespace consq {

enum class Var { p = 0, q = 1, w = 2 };

struct Exponents {
    int p = 0, q = 0, w = 0;
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
    int total() const { return p + q + w; }
    int get(Var v) const { return v == Var::p ? p : (v == Var::q ? q : w); }
    Exponents with(Var v, int e) const {
        Exponents r = *this;
        (v == Var::p ? r.p : v == Var::q ? r.q : r.w) = e;
        return r;
    }
};

template <class K>
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const K& scalar) {
        if (!scalar.is_zero()) terms_[Exponents{}] = scalar;
    }
    static MultiPoly variable(Var v) {
        MultiPoly r;
        Exponents e;
        (v == Var::p ? e.p : v == Var::q ? e.q : e.w) = 1;
        r.terms_[e] = K(1);
        return r;
    }
    static MultiPoly term(const Exponents& e, const K& c) {
        MultiPoly r;
        if (!c.is_zero()) r.terms_[e] = c;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, K>& terms() const { return terms_; }
    K coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.total());
        return d;
    }
    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.get(v));
        return d;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{ea.p + eb.p, ea.q + eb.q, ea.w + eb.w};
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const K& s, const MultiPoly& a) {
        MultiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r(K(1));
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Exact substitution var -> value.
    MultiPoly substitute(Var v, const MultiPoly& value) const {
        // cache powers of the substituted value
        int dmax = degree_in(v);
        std::vector<MultiPoly> powers;
        powers.push_back(MultiPoly(K(1)));
        for (int i = 1; i <= dmax; ++i) powers.push_back(powers.back() * value);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            int ev = e.get(v);
            MultiPoly base = MultiPoly::term(e.with(v, 0), c);
            r += base * powers[static_cast<size_t>(ev)];
        }
        return r;
    }

    K evaluate(const K& pv, const K& qv, const K& wv) const {
        K r{};
        for (const auto& [e, c] : terms_) {
            K m = c;
            for (int i = 0; i < e.p; ++i) m = m * pv;
            for (int i = 0; i < e.q; ++i) m = m * qv;
            for (int i = 0; i < e.w; ++i) m = m * wv;
            r = r + m;
        }
        return r;
    }

    // Coefficients of powers of p, as polynomials in q and w.
    std::map<int, MultiPoly> collect_p() const {
        std::map<int, MultiPoly> out;
        for (const auto& [e, c] : terms_) {
            out[e.p].add_term(e.with(Var::p, 0), c);
        }
        return out;
    }

    template <class F>
    auto map_coefficients(F&& f) const -> MultiPoly<decltype(f(std::declval<K>()))> {
        using K2 = decltype(f(std::declval<K>()));
        MultiPoly<K2> r;
        for (const auto& [e, c] : terms_) {
            K2 c2 = f(c);
            if (!c2.is_zero()) r += MultiPoly<K2>::term(e, c2);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << it->second << ")";
            if (it->first.p) os << "*p^" << it->first.p;
            if (it->first.q) os << "*q^" << it->first.q;
            if (it->first.w) os << "*w^" << it->first.w;
        }
        return os.str();
    }

private:
    void add_term(const Exponents& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Exponents, K> terms_;

    template <class K2>
    friend class MultiPoly;
};

}  // namespace consq
