#include "consq/rational_poly.hpp"

#include <algorithm>

#include "consq/zp.hpp"

namespace consq {

namespace {

using ZPoly = std::vector<Integer>;  // dense, no trailing zeros

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Integer zcontent(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZPoly zprimitive(ZPoly f) {
    ztrim(f);
    if (f.empty()) return f;
    Integer g = zcontent(f);
    if (f.back().sign() < 0) g = -g;
    for (auto& c : f) c = div_exact(c, g);
    return f;
}

modp::Poly reduce_mod(const ZPoly& f, modp::u64 p) {
    modp::Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i].mod_u64(p);
    }
    modp::normalize(r);
    return r;
}

// Exact division test in Z[x]; returns true and fills q when b | a.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly* q_out) {
    if (b.empty()) return false;
    ZPoly r = a;
    ztrim(r);
    if (r.empty()) {
        if (q_out) q_out->clear();
        return true;
    }
    if (r.size() < b.size()) return false;
    ZPoly q(r.size() - b.size() + 1, Integer(0));
    const Integer& lb = b.back();
    for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (r[i].is_zero()) continue;
        if (!divides(lb, r[i])) return false;
        Integer c = div_exact(r[i], lb);
        int shift = i - (static_cast<int>(b.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            r[shift + j] -= c * b[j];
        }
    }
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    if (q_out) *q_out = std::move(q);
    return true;
}

Polynomial<Rational> zpoly_to_monic_rational(const ZPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.size());
    Rational inv_lead = Rational(Integer(1), f.back());
    for (const auto& v : f) c.push_back(Rational(v) * inv_lead);
    return Polynomial<Rational>(std::move(c));
}

Integer symmetric_crt_pair(const Integer& c, const Integer& M, modp::u64 r, modp::u64 p) {
    // x = c (mod M), x = r (mod p), symmetric representative mod M*p
    Integer P = Integer::from_u64(p);
    Integer cp = mod_floor(c, P);
    modp::u64 cmod = cp.mod_u64(p);
    modp::u64 delta = modp::sub(r, cmod, p);
    Integer Minv = Integer::from_u64(modp::inv(mod_floor(M, P).mod_u64(p), p));
    Integer k = mod_floor(Minv * Integer::from_u64(delta), P);
    Integer x = c + M * k;
    Integer Mp = M * P;
    x = mod_floor(x, Mp);
    Integer half = div_trunc(Mp, Integer(2));
    if (x > half) x -= Mp;
    return x;
}

}  // namespace

std::vector<Integer> primitive_integer_poly(const Polynomial<Rational>& f) {
    if (f.is_zero()) throw Error("primitive_integer_poly of zero");
    Integer L(1);
    for (const auto& c : f.coefficients()) L = lcm(L, c.den());
    ZPoly z;
    z.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) z.push_back(c.num() * div_exact(L, c.den()));
    return zprimitive(std::move(z));
}

Polynomial<Rational> gcd_rational_poly(const Polynomial<Rational>& f,
                                       const Polynomial<Rational>& g) {
    if (f.is_zero() && g.is_zero()) return Polynomial<Rational>();
    if (f.is_zero()) return g.make_monic();
    if (g.is_zero()) return f.make_monic();
    if (f.degree() == 0 || g.degree() == 0) return Polynomial<Rational>::one();

    ZPoly F = primitive_integer_poly(f);
    ZPoly G = primitive_integer_poly(g);
    Integer lc_g = gcd(F.back(), G.back());

    Integer M(0);
    std::vector<Integer> C;
    int best_deg = -1;
    std::vector<Integer> last_candidate;
    bool have_last = false;

    for (unsigned k = 0; k < 2000; ++k) {
        modp::u64 p = modp::nth_prime_below_2_62(k);
        if (F.back().mod_u64(p) == 0 || G.back().mod_u64(p) == 0) continue;
        modp::Poly hp = modp::gcd(reduce_mod(F, p), reduce_mod(G, p), p);
        int d = modp::degree(hp);
        if (d == 0) return Polynomial<Rational>::one();
        if (best_deg == -1 || d < best_deg) {
            best_deg = d;
            M = Integer(0);
            C.clear();
            have_last = false;
        } else if (d > best_deg) {
            continue;  // unlucky prime
        }
        // scale so the leading coefficient is lc_g mod p
        modp::u64 s = lc_g.mod_u64(p);
        modp::Poly img = hp;
        for (auto& c : img) c = modp::mul(c, s, p);

        if (M.is_zero()) {
            C.assign(img.size(), Integer(0));
            Integer P = Integer::from_u64(p);
            Integer half = div_trunc(P, Integer(2));
            for (size_t i = 0; i < img.size(); ++i) {
                Integer x = Integer::from_u64(img[i]);
                if (x > half) x -= P;
                C[i] = x;
            }
            M = P;
        } else {
            for (size_t i = 0; i < C.size(); ++i) {
                modp::u64 r = i < img.size() ? img[i] : 0;
                C[i] = symmetric_crt_pair(C[i], M, r, p);
            }
            M *= Integer::from_u64(p);
        }

        ZPoly cand = zprimitive(C);
        if (have_last && cand == last_candidate) {
            if (zdivide(F, cand, nullptr) && zdivide(G, cand, nullptr)) {
                return zpoly_to_monic_rational(cand);
            }
        }
        last_candidate = std::move(cand);
        have_last = true;
    }
    throw InternalIdentityFailure("modular polynomial gcd did not converge");
}

namespace {

// One Hensel stage: given r with F(r) = 0 mod M and u = 1/F'(r) mod M,
// lifts both to mod M^2.
void hensel_step(const ZPoly& F, const ZPoly& dF, Integer& r, Integer& u, Integer& M) {
    Integer M2 = M * M;
    auto eval_mod = [](const ZPoly& f, const Integer& x, const Integer& m) {
        Integer acc(0);
        for (size_t i = f.size(); i-- > 0;) acc = mod_floor(acc * x + f[i], m);
        return acc;
    };
    Integer fr = eval_mod(F, r, M2);
    r = mod_floor(r - fr * u, M2);
    Integer dfr = eval_mod(dF, r, M2);
    u = mod_floor(u * (Integer(2) - dfr * u), M2);
    M = M2;
}

// Wang-style rational reconstruction of n/d from r mod M.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& M) {
    Integer B = div_trunc(M, Integer(2)).isqrt();
    Integer r0 = M, r1 = mod_floor(r, M);
    Integer t0(0), t1(1);
    while (r1 > B) {
        if (r1.is_zero()) return std::nullopt;
        Integer q = div_trunc(r0, r1);
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1.is_zero()) return std::nullopt;
    if (t1.abs() > B) return std::nullopt;
    Integer n = std::move(r1), d = std::move(t1);
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    if (!gcd(n, d).is_one()) return std::nullopt;
    return Rational(std::move(n), std::move(d));
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial<Rational>& f) {
    if (f.is_zero()) throw Error("rational_roots of the zero polynomial");
    std::vector<Rational> out;
    if (f.degree() < 1) return out;

    Polynomial<Rational> work = f;
    // factor out x^v
    {
        std::vector<Rational> c = work.coefficients();
        size_t v = 0;
        while (v < c.size() && c[v].is_zero()) ++v;
        if (v > 0) {
            out.push_back(Rational(0));
            c.erase(c.begin(), c.begin() + static_cast<long>(v));
            work = Polynomial<Rational>(std::move(c));
        }
        if (work.degree() < 1) return out;
    }
    // squarefree part
    Polynomial<Rational> sq = work;
    {
        Polynomial<Rational> g = gcd_rational_poly(work, work.derivative());
        if (g.degree() > 0) sq = divrem(work, g).first;
    }
    if (sq.degree() == 1) {
        out.push_back(-sq.coeff(0) / sq.coeff(1));
        std::sort(out.begin(), out.end());
        return out;
    }

    ZPoly F = primitive_integer_poly(sq);
    ZPoly dF(F.size() - 1, Integer(0));
    for (size_t i = 1; i < F.size(); ++i) dF[i - 1] = F[i] * Integer(static_cast<long>(i));
    ztrim(dF);

    // numerators divide |F[0]|, denominators divide |lc|; lift just past that
    Integer num_bound = F.front().abs();
    Integer den_bound = F.back().abs();
    Integer target = Integer(2) * num_bound * num_bound;
    Integer target2 = Integer(2) * den_bound * den_bound;
    if (target2 > target) target = target2;

    for (unsigned k = 0; k < 64; ++k) {
        modp::u64 p = modp::nth_prime_below_2_62(k);
        if (F.back().mod_u64(p) == 0) continue;
        modp::Poly Fp = reduce_mod(F, p);
        if (modp::degree(modp::gcd(Fp, modp::derivative(Fp, p), p)) != 0) continue;  // not squarefree mod p
        std::vector<modp::u64> rs = modp::roots(Fp, p);
        for (modp::u64 r0 : rs) {
            Integer r = Integer::from_u64(r0);
            Integer M = Integer::from_u64(p);
            Integer u = Integer::from_u64(
                modp::inv(modp::eval(reduce_mod(dF, p), r0, p), p));
            for (int lift = 0; lift < 64; ++lift) {
                auto cand = rational_reconstruct(r, M);
                if (cand && f.evaluate(*cand).is_zero()) {
                    if (std::find(out.begin(), out.end(), *cand) == out.end()) out.push_back(*cand);
                    break;
                }
                if (M > target) break;
                hensel_step(F, dF, r, u, M);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    throw Error("rational_roots: no usable prime found");
}

}  // namespace consq
