#include "powersum/factorization.hpp"

#include <algorithm>
#include <cstdint>

namespace powersum {

namespace {

struct BudgetExceeded {};

// ---- arithmetic mod a small prime -------------------------------------

using FpPoly = std::vector<long long>;  // ascending, coefficients in [0, p)

void fp_norm(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long fp_pow(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

long long fp_inv(long long a, long long p) { return fp_pow(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_norm(r);
    return r;
}

// Remainder of a mod b; b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, long long p) {
    const long long ib = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const long long c = a.back() * ib % p;
        const size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = (a[shift + j] - c * b[j]) % p;
            if (a[shift + j] < 0) a[shift + j] += p;
        }
        fp_norm(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

FpPoly fp_exact_div(FpPoly a, const FpPoly& b, long long p) {
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const long long ib = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const long long c = a.back() * ib % p;
        const size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = (a[shift + j] - c * b[j]) % p;
            if (a[shift + j] < 0) a[shift + j] += p;
        }
        fp_norm(a);
        if (a.size() < b.size()) break;
    }
    return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long long p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const long long inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

FpPoly fp_derivative(const FpPoly& a, long long p) {
    FpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<long long>(i % p) * a[i] % p);
    fp_norm(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, long long e, const FpPoly& mod, long long p) {
    FpPoly r = {1};
    base = fp_rem(std::move(base), mod, p);
    while (e > 0) {
        if (e & 1) r = fp_rem(fp_mul(r, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Primitive integer polynomial reduced mod p; nullopt when the degree drops.
std::optional<FpPoly> reduce_mod_p(const Poly& prim, long long p) {
    FpPoly r(prim.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Integer c = num(prim.coeffs()[i]) % p;
        if (c < 0) c += p;
        r[i] = c.convert_to<long long>();
    }
    if (r.empty() || r.back() == 0) return std::nullopt;
    return r;
}

// Degrees (with repetition) of the irreducible factors of prim mod p, via
// distinct degree factorization.  nullopt when p is unusable for prim.
std::optional<std::vector<long long>> ddf_pattern(const Poly& prim, long long p) {
    auto reduced = reduce_mod_p(prim, p);
    if (!reduced) return std::nullopt;
    FpPoly f = *reduced;
    if (fp_gcd(f, fp_derivative(f, p), p).size() != 1) return std::nullopt;  // not squarefree mod p
    // make monic
    if (f.back() != 1) {
        const long long inv = fp_inv(f.back(), p);
        for (auto& c : f) c = c * inv % p;
    }
    std::vector<long long> pattern;
    FpPoly rest = f;
    FpPoly h = {0, 1};  // x
    long long i = 0;
    while (static_cast<long long>(rest.size()) - 1 >= 2 * (i + 1)) {
        ++i;
        h = fp_powmod(std::move(h), p, rest, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1 + p) % p;
        fp_norm(hx);
        FpPoly g = fp_gcd(hx, rest, p);
        if (g.size() > 1) {
            const long long dg = static_cast<long long>(g.size()) - 1;
            for (long long k = 0; k < dg / i; ++k) pattern.push_back(i);
            rest = fp_exact_div(std::move(rest), g, p);
            h = fp_rem(std::move(h), rest, p);
        }
    }
    if (rest.size() > 1) pattern.push_back(static_cast<long long>(rest.size()) - 1);
    return pattern;
}

// Proper factor degrees compatible with a mod-p factor pattern.
std::vector<bool> subset_sums(const std::vector<long long>& pattern, long long n) {
    std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
    sums[0] = true;
    for (long long part : pattern) {
        for (long long s = n; s >= part; --s)
            if (sums[static_cast<size_t>(s - part)]) sums[static_cast<size_t>(s)] = true;
    }
    return sums;
}

// ---- integer divisor enumeration --------------------------------------

std::vector<Integer> divisors_of(const Integer& n_in, long long& budget) {
    Integer n = n_in < 0 ? Integer(-n_in) : n_in;
    std::vector<std::pair<Integer, long long>> primes;
    Integer d = 2;
    while (d * d <= n) {
        if (--budget < 0) throw BudgetExceeded{};
        if (n % d == 0) {
            long long e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            primes.emplace_back(d, e);
        }
        d += d == 2 ? 1 : 2;
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<Integer> divs = {1};
    for (const auto& [pr, e] : primes) {
        const size_t base = divs.size();
        Integer pw = 1;
        for (long long k = 1; k <= e; ++k) {
            pw *= pr;
            for (size_t i = 0; i < base; ++i) {
                if (--budget < 0) throw BudgetExceeded{};
                divs.push_back(divs[i] * pw);
            }
        }
    }
    return divs;
}

// ---- Kronecker factor search ------------------------------------------

// A degree-d factor of the primitive integer polynomial prim, found by
// interpolation through divisor tuples; nullopt when none exists.
std::optional<Poly> kronecker_degree(const Poly& prim, long long d, const FactorOptions& opts,
                                     long long& trial_budget) {
    std::vector<Rational> pts;
    std::vector<Integer> vals;
    for (long long t = 0; static_cast<long long>(pts.size()) < d + 1; t = t > 0 ? -t : -t + 1) {
        const Rational v = prim(Rational(t));
        if (v == 0) return Poly(std::vector<Rational>{Rational(-t), Rational(1)});
        pts.push_back(Rational(t));
        vals.push_back(num(v));
    }
    std::vector<std::vector<Integer>> divs;
    for (const auto& v : vals) divs.push_back(divisors_of(v, trial_budget));

    // Odometer over divisor choices and signs; the first point's sign is
    // fixed positive since factors come in +/- pairs.
    std::vector<size_t> idx(static_cast<size_t>(d) + 1, 0);
    std::vector<int> sign(static_cast<size_t>(d) + 1, 1);
    long long combos = 0;
    while (true) {
        if (++combos > opts.kronecker_combination_budget) throw BudgetExceeded{};
        // Lagrange interpolation through (pts[i], sign[i]*divs[i][idx[i]]).
        Poly cand;
        for (size_t i = 0; i < idx.size(); ++i) {
            Poly basis(1);
            Rational denom = 1;
            for (size_t j = 0; j < idx.size(); ++j) {
                if (j == i) continue;
                basis *= Poly(std::vector<Rational>{-pts[j], Rational(1)});
                denom *= pts[i] - pts[j];
            }
            basis *= Rational(sign[i]) * Rational(divs[i][idx[i]]) / denom;
            cand += basis;
        }
        if (cand.deg() == d) {
            bool integral = true;
            for (const auto& c : cand.coeffs())
                if (!is_integer(c)) {
                    integral = false;
                    break;
                }
            if (integral && num(cand.lc()) != 0 && num(prim.lc()) % num(cand.lc()) == 0 &&
                divides(cand, prim))
                return cand.monic();
        }
        // advance odometer
        size_t k = 0;
        for (; k < idx.size(); ++k) {
            if (k > 0 && sign[k] == 1) {
                sign[k] = -1;
                break;
            }
            sign[k] = 1;
            if (++idx[k] < divs[k].size()) break;
            idx[k] = 0;
        }
        if (k == idx.size()) return std::nullopt;
    }
}

std::optional<std::vector<Rational>> rational_roots_impl(const Poly& f, const FactorOptions& opts) {
    std::vector<Rational> roots;
    Poly prim = primitive_scale(f).second;
    if (prim.is_constant()) return roots;
    while (!prim.coeffs().empty() && prim.coeffs().front() == 0) {
        if (roots.empty() || roots.back() != 0) roots.push_back(0);
        prim = exact_div(prim, Poly::x());
    }
    if (prim.is_constant()) return roots;
    long long budget = opts.trial_division_budget;
    try {
        const auto ps = divisors_of(num(prim.coeffs().front()), budget);
        const auto qs = divisors_of(num(prim.lc()), budget);
        for (const auto& pd : ps)
            for (const auto& qd : qs) {
                if (boost::multiprecision::gcd(pd, qd) != 1) continue;
                for (int s : {1, -1}) {
                    const Rational cand(s * pd, qd);
                    if (prim(cand) == 0) roots.push_back(cand);
                }
            }
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

constexpr long long kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079};

}  // namespace

std::string to_string(Irreducibility v) {
    switch (v) {
        case Irreducibility::Irreducible: return "irreducible";
        case Irreducibility::Reducible: return "reducible";
        default: return "unverified-irreducible";
    }
}

SquarefreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition out;
    out.unit = f.lc();
    if (f.is_constant()) {
        out.unit = f.coeff(0);
        return out;
    }
    const Poly fm = f.monic();
    const Poly df = fm.derivative();
    Poly g = gcd(fm, df);
    Poly b = exact_div(fm, g);
    Poly c = exact_div(df, g);
    Poly d = c - b.derivative();
    long long i = 1;
    while (b.deg() > 0) {
        Poly a = d.is_zero() ? b.monic() : gcd(b, d);
        if (a.deg() > 0) out.factors.push_back({a, i});
        b = exact_div(b, a);
        c = d.is_zero() ? Poly() : exact_div(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Poly squarefree_part(const Poly& f) {
    Poly part(1);
    for (const auto& sf : squarefree_decompose(f).factors) part *= sf.factor;
    return part;
}

std::vector<Poly> coprime_basis(const std::vector<Poly>& gens) {
    std::vector<Poly> basis;
    // Recursive refinement keeps the basis pairwise coprime at every step.
    auto insert = [&](auto&& self, Poly t) -> void {
        if (t.deg() <= 0) return;
        for (size_t i = 0; i < basis.size(); ++i) {
            Poly d = gcd(t, basis[i]);
            if (d.deg() == 0) continue;
            Poly e = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            self(self, d);
            self(self, exact_div(e, d).monic());
            self(self, exact_div(t, d).monic());
            return;
        }
        basis.push_back(t.monic());
    };
    for (const auto& g : gens) {
        if (g.is_zero() || g.deg() == 0) continue;
        insert(insert, squarefree_part(g));
    }
    std::sort(basis.begin(), basis.end(), poly_less);
    return basis;
}

std::optional<std::vector<Rational>> rational_roots(const Poly& f, const FactorOptions& opts) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    return rational_roots_impl(f, opts);
}

IrreducibilityReport test_irreducible(const Poly& f, const FactorOptions& opts) {
    if (f.deg() <= 0) throw std::domain_error("test_irreducible: constant polynomial");
    const long long n = f.deg();
    if (n == 1) return {Irreducibility::Irreducible, "degree", std::nullopt};
    const Poly prim = primitive_scale(f).second;

    if (prim.coeffs().front() == 0)
        return {Irreducibility::Reducible, "rational-root", Poly::x()};

    // Mod-p certificates: one fully inert prime, or an empty intersection of
    // candidate factor degrees across primes, proves irreducibility.
    std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
    int usable = 0;
    for (long long p : kPrimes) {
        if (usable >= 4) break;
        auto pattern = ddf_pattern(prim, p);
        if (!pattern) continue;
        ++usable;
        if (pattern->size() == 1)
            return {Irreducibility::Irreducible, "mod-p", std::nullopt};
        const auto sums = subset_sums(*pattern, n);
        for (long long dd = 1; dd < n; ++dd)
            if (!sums[static_cast<size_t>(dd)]) allowed[static_cast<size_t>(dd)] = false;
        bool any = false;
        for (long long dd = 1; dd < n; ++dd)
            if (allowed[static_cast<size_t>(dd)]) any = true;
        if (!any) return {Irreducibility::Irreducible, "degree-pattern", std::nullopt};
    }

    auto roots = rational_roots_impl(prim, opts);
    if (roots && !roots->empty()) {
        const Rational& r = roots->front();
        return {Irreducibility::Reducible, "rational-root",
                Poly(std::vector<Rational>{-r, Rational(1)})};
    }
    if (roots && n <= 3) return {Irreducibility::Irreducible, "rational-root", std::nullopt};
    if (!roots && n <= 3) return {Irreducibility::Unverified, "budget", std::nullopt};

    if (n > opts.irreducibility_degree_cap)
        return {Irreducibility::Unverified, "degree-cap", std::nullopt};

    // Complete search: any proper factorization contains a factor of degree
    // at most n/2, and degree 1 was already settled when root enumeration
    // finished within budget.
    long long trial_budget = opts.trial_division_budget;
    try {
        for (long long d = roots ? 2 : 1; d <= n / 2; ++d) {
            if (!allowed[static_cast<size_t>(d)]) continue;
            auto factor = kronecker_degree(prim, d, opts, trial_budget);
            if (factor) return {Irreducibility::Reducible, "kronecker", *factor};
        }
    } catch (const BudgetExceeded&) {
        return {Irreducibility::Unverified, "budget", std::nullopt};
    }
    return {Irreducibility::Irreducible, "kronecker", std::nullopt};
}

Factorization factor(const Poly& f, const FactorOptions& opts) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    Factorization out;
    const auto sf = squarefree_decompose(f);
    out.unit = sf.unit;
    auto split = [&](auto&& self, const Poly& g, long long mult) -> void {
        const auto rep = test_irreducible(g, opts);
        if (rep.verdict == Irreducibility::Reducible) {
            const Poly& w = *rep.witness_factor;
            self(self, w, mult);
            self(self, exact_div(g, w).monic(), mult);
            return;
        }
        out.parts.push_back({g, mult, rep.verdict});
    };
    for (const auto& s : sf.factors) split(split, s.factor, s.multiplicity);
    std::sort(out.parts.begin(), out.parts.end(),
              [](const FactorPart& a, const FactorPart& b) { return poly_less(a.factor, b.factor); });
    return out;
}

}  // namespace powersum
