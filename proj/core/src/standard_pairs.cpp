#include "powersum/standard_pairs.hpp"

#include "powersum/cheb_dickson.hpp"
#include "powersum/recurrence.hpp"

#include <numeric>
#include <stdexcept>

namespace powersum {

namespace {

[[noreturn]] void violated(const std::string& kind, const std::string& clause) {
    throw std::invalid_argument(kind + " kind: restriction violated: " + clause);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::string to_string(PairKind kind) {
    switch (kind) {
        case PairKind::First: return "first";
        case PairKind::Second: return "second";
        case PairKind::Third: return "third";
        case PairKind::Fourth: return "fourth";
        case PairKind::Fifth: return "fifth";
        case PairKind::Specific: return "specific";
    }
    throw std::logic_error("unknown pair kind");
}

PairKind pair_kind_from_string(const std::string& s) {
    if (s == "first") return PairKind::First;
    if (s == "second") return PairKind::Second;
    if (s == "third") return PairKind::Third;
    if (s == "fourth") return PairKind::Fourth;
    if (s == "fifth") return PairKind::Fifth;
    if (s == "specific") return PairKind::Specific;
    throw std::invalid_argument("unknown pair kind: " + s);
}

StandardPair make_standard_pair(PairKind kind, const PairParams& params) {
    StandardPair pair;
    pair.kind = kind;
    pair.params = params;
    const Poly x = Poly::x();
    switch (kind) {
        case PairKind::First: {
            if (params.m < 1 || params.n < 0 || params.n >= params.m)
                violated("first", "0 <= n < m");
            if (std::gcd(params.n, params.m) != 1) violated("first", "gcd(n, m) = 1");
            if (params.p.is_zero()) violated("first", "p != 0");
            if (params.n + params.p.deg() <= 0) violated("first", "n + deg p > 0");
            if (params.a == 0) violated("first", "a != 0");
            pair.left = x.pow(static_cast<unsigned long long>(params.m));
            pair.right = params.a * x.pow(static_cast<unsigned long long>(params.n)) *
                         params.p.pow(static_cast<unsigned long long>(params.m));
            break;
        }
        case PairKind::Second: {
            if (params.a == 0) violated("second", "a != 0");
            if (params.p.is_zero()) violated("second", "p != 0");
            pair.left = x * x;
            pair.right = (params.a * x * x + Poly(params.b)) * params.p * params.p;
            break;
        }
        case PairKind::Third: {
            if (params.m < 1 || params.n < 1) violated("third", "m, n >= 1");
            if (std::gcd(params.m, params.n) != 1) violated("third", "gcd(m, n) = 1");
            if (params.a == 0) violated("third", "a != 0");
            pair.left = dickson(params.m, pow_rational(params.a, params.n));
            pair.right = dickson(params.n, pow_rational(params.a, params.m));
            break;
        }
        case PairKind::Fourth: {
            if (params.m < 2 || params.n < 2 || std::gcd(params.m, params.n) != 2)
                violated("fourth", "gcd(m, n) = 2");
            if (params.a == 0) violated("fourth", "a != 0");
            if (params.b == 0) violated("fourth", "b != 0");
            const Rational sa = pow_rational(Rational(1) / params.a, params.m / 2);
            const Rational sb = pow_rational(Rational(1) / params.b, params.n / 2);
            pair.left = sa * dickson(params.m, params.a);
            pair.right = (-sb) * dickson(params.n, params.b);
            break;
        }
        case PairKind::Fifth: {
            if (params.a == 0) violated("fifth", "a != 0");
            const Poly base = params.a * x * x - Poly(1);
            pair.left = base * base * base;
            pair.right = Rational(3) * x.pow(4) - Rational(4) * x.pow(3);
            break;
        }
        case PairKind::Specific: {
            const long long d = std::gcd(params.m, params.n);
            if (params.m < 1 || params.n < 1 || d < 3) violated("specific", "d = gcd(m, n) >= 3");
            if (params.r == 0) violated("specific", "r != 0");
            if (d == 4 || d == 6)
                throw std::invalid_argument(
                    "specific kind: d = " + std::to_string(d) +
                    " has cos(2*pi/d) rational but the table scaling cos(pi/d) irrational; "
                    "construction over Q is ambiguous and refused");
            if (d != 3)
                throw std::invalid_argument("specific kind: cos(2*pi/" + std::to_string(d) +
                                            ") is irrational, pair not defined over Q");
            pair.left = dickson(params.m, pow_rational(params.r, params.n / d));
            // cos(pi/3) = 1/2
            pair.right = Rational(-1) *
                         dickson(params.n, pow_rational(params.r, params.m / d)).compose(Rational(1, 2) * x);
            break;
        }
    }
    return pair;
}

bool verify_bilu_tichy_shape(const Poly& f, const Poly& g, const Poly& phi,
                             const StandardPair& pair, const Poly& lam, const Poly& mu) {
    if (lam.deg() != 1 || mu.deg() != 1)
        throw std::invalid_argument("verify_bilu_tichy_shape: lambda and mu must be linear");
    return f == phi.compose(pair.left.compose(lam)) && g == phi.compose(pair.right.compose(mu));
}

ExclusionReport exclusion_check_third_kind(const std::vector<PowerSumTerm>& u, long long n,
                                           long long p,
                                           const std::vector<std::array<Rational, 4>>& grid) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("exclusion_check_third_kind: p must be a prime >= 3");
    const StructureReport structure = check_desired_structure(u, n);
    if (!structure.eta_vanishing_ok)
        throw std::invalid_argument(
            "exclusion_check_third_kind: the power sum does not satisfy the vanishing "
            "assumption on the two coefficients below the leading one");

    ExclusionReport rep;
    rep.p = p;
    rep.ell = structure.ell;
    if (rep.ell != p)
        rep.notes.push_back("deg U_n = " + std::to_string(rep.ell) + " differs from p = " +
                            std::to_string(p) + "; slots evaluated formally");
    rep.notes.push_back(
        "slot x^(p-1) vanishes only when d = 0, and then slot x^(p-2) = -a p r c^(p-2) "
        "is nonzero for admissible parameters");

    rep.all_excluded = true;
    const Rational pr(p);
    const Rational choose2(binomial(p, 2));
    for (const auto& tuple : grid) {
        ExclusionGridPoint pt;
        pt.a = tuple[0];
        pt.c = tuple[1];
        pt.d = tuple[2];
        pt.r = tuple[3];
        pt.coeff_top = pt.a * pr * pow_rational(pt.c, p - 1) * pt.d;
        pt.coeff_second = pt.a * pow_rational(pt.c, p - 2) * (choose2 * pt.d * pt.d - pr * pt.r);

        const Poly shifted = dickson(p, pt.r).compose(pt.c * Poly::x() + Poly(pt.d));
        const Poly full = pt.a * shifted;
        if (full.coeff(p - 1) != pt.coeff_top || full.coeff(p - 2) != pt.coeff_second)
            throw std::logic_error("exclusion_check_third_kind: closed-form slots disagree "
                                   "with the exact Dickson expansion");

        pt.admissible = pt.a != 0 && pt.c != 0 && pt.r != 0;
        pt.excluded = pt.admissible && (pt.coeff_top != 0 || pt.coeff_second != 0);
        if (pt.admissible && !pt.excluded) rep.all_excluded = false;
        if (!pt.admissible)
            rep.notes.push_back("grid point with a, c or r zero is outside the admissible range");
        rep.grid.push_back(pt);
    }
    return rep;
}

}  // namespace powersum
