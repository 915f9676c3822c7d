#include "consq/integer.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace consq {

Integer::Integer(std::string_view decimal) {
    mpz_init(z_);
    if (decimal.empty()) throw ParseError("empty integer literal");
    size_t i = 0;
    if (decimal[0] == '-' || decimal[0] == '+') i = 1;
    if (i == decimal.size()) throw ParseError("sign without digits");
    for (size_t j = i; j < decimal.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(decimal[j])))
            throw ParseError("bad integer literal: " + std::string(decimal));
    }
    if (mpz_set_str(z_, std::string(decimal).c_str(), 10) != 0)
        throw ParseError("bad integer literal: " + std::string(decimal));
}

std::string Integer::to_decimal() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Integer div_exact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw DivisionByZero("exact integer division");
    if (!divides(b, a)) throw InternalIdentityFailure("non-exact integer division");
    Integer r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
}

double Integer::log_abs() const {
    if (is_zero()) throw ZeroHeightInput("log of zero");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, z_);
    return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

std::uint64_t Integer::mod_u64(std::uint64_t m) const {
    Integer mm = Integer::from_u64(m);
    Integer r = mod_floor(*this, mm);
    // r fits in a u64 by construction
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, r.z_);
    return out;
}

Integer Integer::from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.z_, 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_decimal(); }

}  // namespace consq
