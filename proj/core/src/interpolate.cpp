#include "consq/interpolate.hpp"

#include <algorithm>
#include <random>

#include "consq/rational_poly.hpp"

namespace consq {

Polynomial<Rational> lagrange_interpolate(const std::vector<Rational>& xs,
                                          const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw Error("lagrange: bad sample set");
    Polynomial<Rational> acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Polynomial<Rational> basis = Polynomial<Rational>::one();
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Polynomial<Rational>(std::vector<Rational>{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc += (ys[i] / denom) * basis;
    }
    return acc;
}

namespace {

// Nonzero kernel vector of the N x U matrix (row-major), or empty if none.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> m, size_t ucols) {
    size_t nrows = m.size();
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    std::vector<bool> is_pivot(ucols, false);
    for (size_t col = 0; col < ucols && row < nrows; ++col) {
        size_t sel = row;
        while (sel < nrows && m[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j < ucols; ++j) m[row][j] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t j = col; j < ucols; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    size_t free_col = ucols;
    for (size_t col = 0; col < ucols; ++col) {
        if (!is_pivot[col]) {
            free_col = col;
            break;
        }
    }
    if (free_col == ucols) return {};
    std::vector<Rational> x(ucols, Rational(0));
    x[free_col] = Rational(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        size_t pc = pivot_col_of_row[r];
        // pivot row r: x[pc] = -sum_{j>pc, non-pivot} m[r][j]*x[j]
        Rational s(0);
        for (size_t j = pc + 1; j < ucols; ++j) {
            if (!m[r][j].is_zero() && !x[j].is_zero()) s += m[r][j] * x[j];
        }
        x[pc] = -s;
    }
    return x;
}

}  // namespace

std::optional<RationalFunction> reconstruct_rational_function(
    const std::vector<Rational>& xs, const std::vector<Rational>& ys,
    int num_degree_bound, int den_degree_bound) {
    if (den_degree_bound == 0) {
        size_t pts = static_cast<size_t>(num_degree_bound) + 1;
        if (xs.size() < pts) throw Error("reconstruct: not enough samples");
        std::vector<Rational> x2(xs.begin(), xs.begin() + static_cast<long>(pts));
        std::vector<Rational> y2(ys.begin(), ys.begin() + static_cast<long>(pts));
        return RationalFunction(lagrange_interpolate(x2, y2));
    }
    size_t un = static_cast<size_t>(num_degree_bound) + 1;
    size_t ud = static_cast<size_t>(den_degree_bound) + 1;
    size_t ucols = un + ud;
    if (xs.size() + 1 < ucols) throw Error("reconstruct: not enough samples");
    std::vector<std::vector<Rational>> m;
    m.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        std::vector<Rational> rowv(ucols, Rational(0));
        Rational xp(1);
        for (size_t j = 0; j < un; ++j) {
            rowv[j] = xp;
            xp *= xs[i];
        }
        xp = Rational(1);
        for (size_t j = 0; j < ud; ++j) {
            rowv[un + j] = -(ys[i] * xp);
            xp *= xs[i];
        }
        m.push_back(std::move(rowv));
    }
    std::vector<Rational> sol = kernel_vector(std::move(m), ucols);
    if (sol.empty()) return std::nullopt;
    std::vector<Rational> nc(sol.begin(), sol.begin() + static_cast<long>(un));
    std::vector<Rational> dc(sol.begin() + static_cast<long>(un), sol.end());
    Polynomial<Rational> num(std::move(nc)), den(std::move(dc));
    if (den.is_zero()) return std::nullopt;
    return RationalFunction(std::move(num), std::move(den));
}

std::vector<RationalFunction> rational_root_interpolation(
    const Polynomial<RationalFunction>& D, const RootInterpolationOptions& opt) {
    if (D.is_zero()) throw Error("root interpolation of the zero polynomial");
    if (D.degree() < 1) throw NoRationalRoot("constant polynomial");

    const size_t needed =
        static_cast<size_t>(opt.num_degree_bound + opt.den_degree_bound + 1);
    const size_t total = needed + static_cast<size_t>(opt.extra_samples);

    std::mt19937 rng(opt.seed);
    for (long base : {307L, 3023L, 30091L}) {
        // gather specializations with their sorted rational root sets
        std::vector<Rational> taus;
        std::vector<std::vector<Rational>> rootsets;
        int rootless = 0;
        long tau_int = base + static_cast<long>(rng() % 97);
        while (taus.size() < total && tau_int < base * 40) {
            Rational tau(tau_int);
            tau_int += 1 + static_cast<long>(rng() % 3);
            bool bad = false;
            for (const auto& c : D.coefficients()) {
                if (c.denominator_vanishes_at(tau)) {
                    bad = true;
                    break;
                }
            }
            if (bad) continue;
            if (D.leading().evaluate(tau).is_zero()) continue;  // degree drop
            Polynomial<Rational> spec = specialize(D, tau);
            std::vector<Rational> rs = rational_roots(spec);
            if (rs.empty()) {
                if (++rootless >= opt.min_rooted_samples)
                    throw NoRationalRoot("several specializations have no rational root");
                continue;
            }
            taus.push_back(tau);
            rootsets.push_back(std::move(rs));
        }
        if (taus.size() < total) continue;

        size_t mincount = SIZE_MAX;
        for (const auto& rs : rootsets) mincount = std::min(mincount, rs.size());

        std::vector<RationalFunction> found;
        for (size_t idx = 0; idx < mincount; ++idx) {
            std::vector<Rational> xs(taus.begin(), taus.begin() + static_cast<long>(needed));
            std::vector<Rational> ys;
            for (size_t i = 0; i < needed; ++i) ys.push_back(rootsets[i][idx]);
            auto cand =
                reconstruct_rational_function(xs, ys, opt.num_degree_bound, opt.den_degree_bound);
            if (!cand) continue;
            // held-out check before the symbolic one
            bool ok = true;
            for (size_t i = needed; i < total && ok; ++i) {
                if (cand->denominator_vanishes_at(taus[i])) {
                    ok = false;
                    break;
                }
                Rational v = cand->evaluate(taus[i]);
                ok = std::any_of(rootsets[i].begin(), rootsets[i].end(),
                                 [&](const Rational& r) { return r == v; });
            }
            if (!ok) continue;
            if (!D.evaluate(*cand).is_zero()) continue;
            if (std::find(found.begin(), found.end(), *cand) == found.end())
                found.push_back(*cand);
        }
        if (!found.empty()) return found;
    }
    throw DegreeBoundExceeded("root branches exist pointwise but no bounded candidate verified");
}

}  // namespace consq
