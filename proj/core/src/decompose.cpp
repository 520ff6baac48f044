#include "powersum/decompose.hpp"

#include "powersum/cheb_dickson.hpp"
#include "powersum/factorization.hpp"

#include <algorithm>

namespace powersum {

std::optional<std::pair<Poly, Poly>> decompose_step(const Poly& f, long long r) {
    const long long n = f.deg();
    if (n < 4) throw std::invalid_argument("decompose_step: deg f must be at least 4");
    if (r <= 1 || r >= n || n % r != 0)
        throw std::invalid_argument("decompose_step: r must be a proper divisor of deg f");
    const long long m = n / r;
    const Rational& a_m = f.lc();

    // Candidate inner h: monic, h(0) = 0, determined from the top r
    // coefficients of f below the leading one.  Adding c x^(r-j) to h moves
    // the coefficient of x^(n-j) in lc(f) h^m by exactly m lc(f) c.
    Poly h = Poly::monomial(r, 1);
    for (long long j = 1; j < r; ++j) {
        const Poly pw = h.pow(static_cast<unsigned long long>(m)) * a_m;
        const Rational c = (f.coeff(n - j) - pw.coeff(n - j)) / (Rational(m) * a_m);
        if (c != 0) h += Poly::monomial(r - j, c);
    }

    // h-adic digits of f; the decomposition exists iff every digit is
    // constant, and the digits are then the coefficients of g.
    std::vector<Rational> g_coeffs;
    Poly rest = f;
    while (!rest.is_zero()) {
        auto [quot, digit] = div_rem(rest, h);
        if (digit.deg() > 0) return std::nullopt;
        g_coeffs.push_back(digit.coeff(0));
        rest = std::move(quot);
    }
    Poly g(std::move(g_coeffs));
    if (g.compose(h) != f) return std::nullopt;
    return std::make_pair(std::move(g), std::move(h));
}

std::vector<Poly> full_decomposition(const Poly& f) {
    if (f.deg() < 1) throw std::invalid_argument("full_decomposition: deg f must be at least 1");
    const long long n = f.deg();
    if (n >= 4) {
        // The smallest split-off inner degree gives an indecomposable inner
        // factor: any decomposition of it would yield a smaller split of f.
        for (long long r = 2; r < n; ++r) {
            if (n % r != 0) continue;
            if (auto gh = decompose_step(f, r)) {
                std::vector<Poly> chain = full_decomposition(gh->first);
                chain.push_back(gh->second);
                return chain;
            }
        }
    }
    return {f};
}

std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Cyclic: return "cyclic";
        case ShapeKind::Dihedral: return "dihedral";
        default: return "neither";
    }
}

ShapeTag classify_shape(const Poly& h) {
    const long long n = h.deg();
    if (n < 2) throw std::invalid_argument("classify_shape: deg h must be at least 2");
    ShapeTag tag;
    tag.n = n;

    // Cyclic: h = alpha (x + t)^n + delta, read t off the subleading
    // coefficient.
    {
        const Rational& alpha = h.lc();
        const Rational t = h.coeff(n - 1) / (Rational(n) * alpha);
        const Poly shifted = Poly(std::vector<Rational>{t, 1});
        const Poly delta_poly = h - alpha * shifted.pow(static_cast<unsigned long long>(n));
        if (delta_poly.is_constant()) {
            tag.kind = ShapeKind::Cyclic;
            tag.l1 = Poly(std::vector<Rational>{delta_poly.coeff(0), alpha});
            tag.l2 = shifted;
            return tag;
        }
    }

    // Dihedral: h = p T_n(u x + v) + q for n >= 3.  With w = v/u read from
    // the subleading coefficient, the x^(n-2) coefficient pins u^2.
    if (n >= 3) {
        const Rational w = h.coeff(n - 1) / (Rational(n) * h.lc());
        const Rational k = h.coeff(n - 2) / h.lc();
        const Rational denom = Rational(binomial(n, 2)) * w * w - k;
        if (denom != 0) {
            const Rational u_sq = Rational(n, 4) / denom;
            if (u_sq > 0) {
                if (auto u = rational_root(u_sq, 2)) {
                    const Rational v = w * *u;
                    const Rational p = h.lc() / (pow_rational(2, n - 1) * pow_rational(*u, n));
                    const Poly inner(std::vector<Rational>{v, *u});
                    const Poly q_poly = h - p * chebyshev(n).compose(inner);
                    if (q_poly.is_constant()) {
                        tag.kind = ShapeKind::Dihedral;
                        tag.l1 = Poly(std::vector<Rational>{q_poly.coeff(0), p});
                        tag.l2 = inner;
                        return tag;
                    }
                } else {
                    tag.note = "a Chebyshev conjugation would need an irrational scaling";
                }
            }
        }
    }
    tag.kind = ShapeKind::Neither;
    return tag;
}

std::optional<Poly> solve_outer(const Poly& U, const Poly& V) {
    const long long m = U.deg();
    if (m < 1) throw std::invalid_argument("solve_outer: U must be nonconstant");

    if (V.deg() < 1) {
        // Constant targets: Q is a constant rational root of U - V.
        auto roots = rational_roots(U - V);
        if (!roots || roots->empty()) return std::nullopt;
        return Poly(roots->front());
    }
    if (V.deg() % m != 0) return std::nullopt;
    const long long k = V.deg() / m;

    if (m == 1) return (V - Poly(U.coeff(0))) * (Rational(1) / U.lc());

    const Rational lc_ratio = V.lc() / U.lc();
    auto root = rational_root(lc_ratio, static_cast<unsigned>(m));
    if (!root) return std::nullopt;
    std::vector<Rational> lead_candidates = {*root};
    if (m % 2 == 0) lead_candidates.push_back(-*root);

    for (const Rational& c_k : lead_candidates) {
        Poly q = Poly::monomial(k, c_k);
        const Rational scale = Rational(m) * U.lc() * pow_rational(c_k, m - 1);
        for (long long j = 1; j <= k; ++j) {
            const Poly image = U.compose(q);
            const Rational c = (V.coeff(m * k - j) - image.coeff(m * k - j)) / scale;
            if (c != 0) q += Poly::monomial(k - j, c);
        }
        if (U.compose(q) == V) return q;
    }
    return std::nullopt;
}

std::optional<Poly> linear_power_root(const Poly& p) {
    const long long k = p.deg();
    if (k < 1) return std::nullopt;
    const Rational t = p.coeff(k - 1) / (Rational(k) * p.lc());
    const Poly shifted(std::vector<Rational>{t, 1});
    if (p != p.lc() * shifted.pow(static_cast<unsigned long long>(k))) return std::nullopt;
    auto u = rational_root(p.lc(), static_cast<unsigned>(k));
    if (!u) return std::nullopt;
    return Poly(std::vector<Rational>{*u * t, *u});
}

}  // namespace powersum
