#include "consq/zp.hpp"

#include <algorithm>

namespace consq::modp {

u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b;  // p < 2^62 so no wrap
    return s >= p ? s - p : s;
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) { return pow(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic Miller-Rabin witness set for n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 nth_prime_below_2_62(unsigned k) {
    static std::vector<u64> cache;
    if (k < cache.size()) return cache[k];
    u64 candidate = cache.empty() ? ((1ull << 62) - 1) : cache.back() - 2;
    while (cache.size() <= k) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        cache.push_back(candidate);
        candidate -= 2;
    }
    return cache[k];
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
        }
    }
    normalize(r);
    return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = add(x, y, p);
    }
    normalize(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = sub(x, y, p);
    }
    normalize(r);
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g, u64 p) {
    Poly r = f;
    normalize(r);
    if (g.empty()) return {{}, r};
    if (r.size() < g.size()) return {{}, r};
    Poly q(r.size() - g.size() + 1, 0);
    u64 lg = inv(g.back(), p);
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(g.size()) - 1; --i) {
        if (r[i] == 0) continue;
        u64 c = mul(r[i], lg, p);
        int shift = i - (static_cast<int>(g.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < g.size(); ++j) {
            r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
        }
    }
    normalize(q);
    normalize(r);
    return {q, r};
}

Poly make_monic(const Poly& f, u64 p) {
    if (f.empty() || f.back() == 1) return f;
    Poly r = f;
    u64 s = inv(r.back(), p);
    for (auto& c : r) c = mul(c, s, p);
    return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        auto [q, r] = divrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& mod, u64 p) {
    Poly r{1};
    Poly b = divrem(base, mod, p).second;
    Integer k = e;
    while (k.sign() > 0) {
        if (k.is_odd()) r = divrem(mul(r, b, p), mod, p).second;
        b = divrem(mul(b, b, p), mod, p).second;
        k = div_trunc(k, Integer(2));
    }
    return r;
}

Poly derivative(const Poly& f, u64 p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1, 0);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p, p);
    normalize(r);
    return r;
}

u64 eval(const Poly& f, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = add(mul(r, x, p), f[i] % p, p);
    return r;
}

namespace {

// Splits a monic product of distinct linear factors into roots.
void find_roots_of_splitting(const Poly& f, u64 p, std::vector<u64>& out, u64& state) {
    int d = degree(f);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(sub(0, f[0], p));  // monic: root = -c0
        return;
    }
    while (true) {
        // xorshift for a deterministic trial sequence
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        u64 a = state % p;
        // h = (x + a)^((p-1)/2) - 1 mod f
        Poly shifted{a, 1};
        Poly h = powmod(shifted, Integer::from_u64((p - 1) / 2), f, p);
        if (h.empty())
            h = Poly{p - 1};
        else
            h[0] = sub(h[0], 1, p);
        normalize(h);
        Poly g = gcd(f, h, p);
        int dg = degree(g);
        if (dg > 0 && dg < d) {
            find_roots_of_splitting(g, p, out, state);
            find_roots_of_splitting(divrem(f, g, p).first, p, out, state);
            return;
        }
    }
}

}  // namespace

std::vector<u64> roots(const Poly& f, u64 p) {
    Poly g = f;
    normalize(g);
    if (degree(g) < 1) return {};
    g = make_monic(g, p);
    // gcd with x^p - x isolates the distinct linear factors
    Poly xp = powmod(Poly{0, 1}, Integer::from_u64(p), g, p);
    // xp - x
    Poly xpm = sub(xp, Poly{0, 1}, p);
    Poly lin = gcd(g, xpm, p);
    std::vector<u64> out;
    u64 state = 0x9e3779b97f4a7c15ull ^ p;
    find_roots_of_splitting(lin, p, out, state);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace consq::modp
