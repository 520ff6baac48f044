#include "powersum/recurrence.hpp"

#include "powersum/decompose.hpp"

#include <cmath>
#include <random>

namespace powersum {

namespace {

void validate_spec_shape(const RecurrenceSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("recurrence: order must be positive");
    if (static_cast<long long>(spec.coeffs.size()) != spec.order ||
        static_cast<long long>(spec.initial.size()) != spec.order)
        throw std::invalid_argument("recurrence: coeffs/initial size must equal order");
}

void validate_power_sum(const std::vector<PowerSumTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("power sum: no terms");
    for (const auto& t : terms) {
        if (t.alpha.is_zero()) throw std::invalid_argument("power sum: zero characteristic root");
        if (t.a.is_zero()) throw std::invalid_argument("power sum: zero coefficient");
    }
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j)
            if (terms[i].alpha == terms[j].alpha)
                throw std::invalid_argument("power sum: characteristic roots must be distinct");
}

using Cplx = std::complex<double>;

constexpr double kDegenerateEps = 1e-12;

// Closed-form weight checks divide by root differences and then raise the
// roots to the n-th power, so nearly colliding roots lose far more accuracy
// than the residual checks do.  Samples below this relative separation are
// skipped rather than verified.
constexpr double kSeparationEps = 1e-2;

// Exact terms can nearly vanish at a sample point while their coefficients
// are huge, in which case double Horner evaluation loses most digits.  A
// real double sample is a dyadic rational, so evaluate exactly and round
// once at the end.
Cplx eval_term(const Poly& p, const Cplx& x0) {
    if (x0.imag() != 0.0)
        return p(x0);
    return Cplx(static_cast<double>(p(Rational(x0.real()))), 0.0);
}

bool roots_well_separated(const Cplx* lambda, size_t count) {
    double maxmag = 0;
    for (size_t i = 0; i < count; ++i) maxmag = std::max(maxmag, std::abs(lambda[i]));
    const double floor = kSeparationEps * (1.0 + maxmag);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = i + 1; j < count; ++j)
            if (std::abs(lambda[i] - lambda[j]) <= floor) return false;
    return true;
}

struct CubicRoots {
    std::array<Cplx, 3> lambda;
    Cplx sqrt_disc;
    Cplx delta;  // root Vandermonde, computed from the lambdas
    bool degenerate = false;
};

CubicRoots cubic_roots_at(const CubicSymbolicData& csd, const Cplx& x0) {
    CubicRoots out;
    const Cplx a = csd.a(x0);
    const Cplx q2 = csd.q(x0) / 2.0;
    const Cplx p3 = csd.p(x0) / 3.0;
    const Cplx D = csd.disc(x0);
    const double scale = 1.0 + std::abs(q2) * std::abs(q2) +
                         std::abs(p3) * std::abs(p3) * std::abs(p3);
    if (std::abs(D) <= kDegenerateEps * scale) {
        out.degenerate = true;
        return out;
    }
    out.sqrt_disc = std::sqrt(D);
    const Cplx big = q2 + out.sqrt_disc;
    const Cplx small = q2 - out.sqrt_disc;
    Cplx u, v;
    if (std::abs(big) >= std::abs(small)) {
        u = std::pow(big, 1.0 / 3.0);
        v = std::abs(u) > 1e-100 ? p3 / u : std::pow(small, 1.0 / 3.0);
    } else {
        v = std::pow(small, 1.0 / 3.0);
        u = std::abs(v) > 1e-100 ? p3 / v : std::pow(big, 1.0 / 3.0);
    }
    const Cplx a3 = a / 3.0;
    const Cplx s = u + v;
    const Cplx t = Cplx(0.0, std::sqrt(3.0) / 2.0) * (u - v);
    out.lambda = {s + a3, -s / 2.0 + t + a3, -s / 2.0 - t + a3};
    const auto& l = out.lambda;
    out.delta = l[0] * l[1] * (l[1] - l[0]) + l[0] * l[2] * (l[0] - l[2]) +
                l[1] * l[2] * (l[2] - l[1]);
    if (std::abs(out.delta) <= kDegenerateEps * (1.0 + std::abs(l[0]) + std::abs(l[1]) + std::abs(l[2]))) {
        out.degenerate = true;
    }
    return out;
}

// Cramer numerators of the Binet weights: w_i = l_i / delta.
std::array<Cplx, 3> cramer_numerators(const CubicRoots& roots, const Cplx& w0, const Cplx& w1,
                                      const Cplx& w2) {
    const auto& l = roots.lambda;
    auto bracket = [&](const Cplx& lj, const Cplx& lk) { return w2 - w1 * (lj + lk) + w0 * lj * lk; };
    return {(l[2] - l[1]) * bracket(l[2], l[1]), (l[0] - l[2]) * bracket(l[0], l[2]),
            (l[1] - l[0]) * bracket(l[1], l[0])};
}

double mixed(const Cplx& err, double reference) { return std::abs(err) / (1.0 + reference); }

}  // namespace

std::vector<Poly> generate_terms(const RecurrenceSpec& spec, long long max_n) {
    validate_spec_shape(spec);
    if (max_n < 0) throw std::invalid_argument("generate_terms: negative index");
    std::vector<Poly> terms = spec.initial;
    terms.resize(std::min<long long>(spec.order, max_n + 1));
    for (long long n = spec.order; n <= max_n; ++n) {
        Poly next;
        for (long long i = 0; i < spec.order; ++i)
            next += spec.coeffs[static_cast<size_t>(i)] * terms[static_cast<size_t>(n - 1 - i)];
        terms.push_back(std::move(next));
    }
    return terms;
}

Poly expand_power_sum(const std::vector<PowerSumTerm>& terms, long long n) {
    validate_power_sum(terms);
    if (n < 0) throw std::invalid_argument("expand_power_sum: negative index");
    Poly out;
    for (const auto& t : terms) out += t.a * t.alpha.pow(static_cast<unsigned long long>(n));
    return out;
}

RecurrenceSpec induced_recurrence(const std::vector<PowerSumTerm>& terms) {
    validate_power_sum(terms);
    const long long d = static_cast<long long>(terms.size());
    // Characteristic polynomial prod (T - alpha_i), coefficients in Q[x].
    std::vector<Poly> char_poly = {Poly(1)};
    for (const auto& t : terms) {
        std::vector<Poly> next(char_poly.size() + 1);
        for (size_t j = 0; j < char_poly.size(); ++j) {
            next[j + 1] += char_poly[j];
            next[j] -= t.alpha * char_poly[j];
        }
        char_poly = std::move(next);
    }
    RecurrenceSpec spec;
    spec.order = d;
    for (long long i = 0; i < d; ++i) spec.coeffs.push_back(-char_poly[static_cast<size_t>(d - 1 - i)]);
    for (long long n = 0; n < d; ++n) spec.initial.push_back(expand_power_sum(terms, n));
    spec.power_sum = terms;
    return spec;
}

ConsistencyReport check_power_sum_consistency(const RecurrenceSpec& spec, long long n_max) {
    validate_spec_shape(spec);
    ConsistencyReport rep;
    if (!spec.power_sum) {
        rep.ok = false;
        rep.details.push_back("spec has no power_sum part");
        return rep;
    }
    const auto terms = generate_terms(spec, n_max);
    for (long long n = 0; n <= n_max; ++n) {
        if (terms[static_cast<size_t>(n)] != expand_power_sum(*spec.power_sum, n)) {
            rep.ok = false;
            rep.first_mismatch = n;
            rep.details.push_back("terms disagree first at n = " + std::to_string(n));
            break;
        }
    }
    const RecurrenceSpec induced = induced_recurrence(*spec.power_sum);
    if (induced.order == spec.order && induced.coeffs != spec.coeffs)
        rep.details.push_back("recurrence coefficients differ from the characteristic polynomial of the power sum");
    return rep;
}

StructureReport check_desired_structure(const std::vector<PowerSumTerm>& terms, long long n) {
    validate_power_sum(terms);
    if (n < 3) throw std::invalid_argument("check_desired_structure: n must be at least 3");
    if (terms.size() < 2) throw std::invalid_argument("check_desired_structure: need at least two terms");
    StructureReport rep;
    const Poly& a1 = terms[0].a;
    const Poly& alpha1 = terms[0].alpha;

    long long max_other = -1;
    long long constant_roots = 0;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].alpha.deg() == 0) ++constant_roots;
        if (i > 0) max_other = std::max(max_other, terms[i].alpha.deg());
    }
    rep.dominant_root_ok = alpha1.deg() > max_other && constant_roots <= 1;
    if (!rep.dominant_root_ok)
        rep.details.push_back(alpha1.deg() <= max_other
                                  ? "first root does not strictly dominate the others"
                                  : "more than one constant characteristic root");

    rep.coeff_degree_ok = true;
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[i].a.deg() > a1.deg()) rep.coeff_degree_ok = false;
    if (!rep.coeff_degree_ok) rep.details.push_back("first coefficient does not have maximal degree");

    if (terms.size() == 2 && terms[1].alpha.deg() == 0) {
        const bool forbidden = a1.is_constant() && terms[1].a.is_constant() &&
                               alpha1.deg() >= 1 && linear_power_root(alpha1).has_value();
        rep.excluded_binary_form_ok = !forbidden;
        if (forbidden)
            rep.details.push_back("matches the excluded binary shape: constant coefficients and a dominant root that is an exact power of a linear polynomial");
    } else {
        rep.excluded_binary_form_ok = true;
        rep.details.push_back("excluded-shape test not applicable by shape");
    }

    const Poly u = expand_power_sum(terms, n);
    rep.ell = a1.deg() + n * alpha1.deg();
    rep.eta_top = u.coeff(rep.ell);
    rep.eta_1 = u.coeff(rep.ell - 1);
    rep.eta_2 = u.coeff(rep.ell - 2);
    if (u.deg() != rep.ell)
        rep.details.push_back("deg U_n = " + to_string(u.degree()) +
                              " differs from deg a_1 + n deg alpha_1 = " + std::to_string(rep.ell));
    rep.eta_vanishing_ok = rep.eta_1 == 0 && rep.eta_2 == 0;
    if (!rep.eta_vanishing_ok)
        rep.details.push_back("the two coefficients below the leading one do not both vanish");

    rep.all_ok = rep.dominant_root_ok && rep.coeff_degree_ok && rep.excluded_binary_form_ok &&
                 rep.eta_vanishing_ok;
    return rep;
}

CubicSymbolicData cubic_symbolic_data(const RecurrenceSpec& spec) {
    validate_spec_shape(spec);
    if (spec.order != 3) throw std::invalid_argument("cubic_symbolic_data: order must be 3");
    CubicSymbolicData out;
    out.a = spec.coeffs[0];
    out.b = spec.coeffs[1];
    out.c = spec.coeffs[2];
    out.p = Rational(1, 3) * (out.a * out.a) + out.b;
    out.q = Rational(2, 27) * (out.a * out.a * out.a) + Rational(1, 3) * (out.a * out.b) + out.c;
    const Poly q2 = Rational(1, 2) * out.q;
    const Poly p3 = Rational(1, 3) * out.p;
    out.disc = q2 * q2 - p3 * p3 * p3;

    if (!out.a.is_zero() && !out.c.is_zero()) {
        out.deg_q_expected = 3 * out.a.deg();
        out.deg_disc_expected = 3 * out.a.deg() + out.c.deg();
        out.deg_q_matches = out.q.deg() == out.deg_q_expected;
        out.deg_disc_matches = out.disc.deg() == out.deg_disc_expected;
        if (!out.deg_q_matches)
            out.notes.push_back("deg q = " + to_string(out.q.degree()) +
                                " departs from 3 deg a = " + std::to_string(out.deg_q_expected) +
                                " (leading-term cancellation)");
        if (!out.deg_disc_matches)
            out.notes.push_back("deg disc = " + to_string(out.disc.degree()) +
                                " departs from 3 deg a + deg c = " +
                                std::to_string(out.deg_disc_expected) +
                                " (leading-term cancellation)");
    } else {
        out.deg_q_expected = out.q.deg();
        out.deg_disc_expected = out.disc.deg();
        out.deg_q_matches = true;
        out.deg_disc_matches = true;
        out.notes.push_back("a or c is zero: expected-degree formulas not applicable");
    }
    return out;
}

std::vector<Cplx> default_sample_points(long long count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<Cplx> pts;
    for (long long i = 0; i < count; ++i) {
        const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
        pts.emplace_back(-4.0 + 8.0 * unit, 0.0);
    }
    return pts;
}

CardanoReport cardano_verify(const RecurrenceSpec& spec,
                             const std::vector<Cplx>& sample_points, double tol) {
    const CubicSymbolicData csd = cubic_symbolic_data(spec);
    CardanoReport rep;
    rep.tol = tol;
    bool all_ok = true;
    for (const Cplx& x0 : sample_points) {
        CardanoSample s;
        s.x0 = x0;
        const CubicRoots roots = cubic_roots_at(csd, x0);
        if (roots.degenerate) {
            s.degenerate = true;
            ++rep.filtered;
            rep.samples.push_back(s);
            continue;
        }
        const Cplx a = csd.a(x0), b = csd.b(x0), c = csd.c(x0);
        s.lambda = roots.lambda;
        double char_res = 0;
        for (const Cplx& l : s.lambda) {
            const Cplx res = l * l * l - a * l * l - b * l - c;
            char_res = std::max(char_res, std::abs(res) / (1.0 + std::abs(l) * std::abs(l) * std::abs(l)));
        }
        s.char_residual = char_res;
        const Cplx e1 = s.lambda[0] + s.lambda[1] + s.lambda[2];
        const Cplx e2 = s.lambda[0] * s.lambda[1] + s.lambda[0] * s.lambda[2] + s.lambda[1] * s.lambda[2];
        const Cplx e3 = s.lambda[0] * s.lambda[1] * s.lambda[2];
        s.vieta_e1_residual = mixed(e1 - a, std::abs(a));
        s.vieta_e2_residual = mixed(e2 + b, std::abs(b));
        s.vieta_e3_residual = mixed(e3 - c, std::abs(c));
        s.delta_identity_residual =
            mixed(roots.delta + Cplx(0.0, 6.0 * std::sqrt(3.0)) * roots.sqrt_disc, std::abs(roots.delta));
        const Cplx w0 = spec.initial[0](x0), w1 = spec.initial[1](x0), w2 = spec.initial[2](x0);
        const auto ells = cramer_numerators(roots, w0, w1, w2);
        for (int i = 0; i < 3; ++i) s.w[static_cast<size_t>(i)] = ells[static_cast<size_t>(i)] / roots.delta;
        ++rep.used;
        if (s.char_residual > tol || s.vieta_e1_residual > tol || s.vieta_e2_residual > tol ||
            s.vieta_e3_residual > tol || s.delta_identity_residual > tol)
            all_ok = false;
        rep.samples.push_back(s);
    }
    if (rep.used == 0) throw std::invalid_argument("no valid sample points");
    rep.ok = all_ok;
    return rep;
}

BinetReport binet_verify(const RecurrenceSpec& spec, const std::vector<Cplx>& sample_points,
                         long long n_max, double tol) {
    validate_spec_shape(spec);
    if (spec.order != 2 && spec.order != 3)
        throw std::invalid_argument("binet_verify: order must be 2 or 3");
    BinetReport rep;
    rep.n_max = n_max;
    rep.tol = tol;
    const auto terms = generate_terms(spec, n_max);

    if (spec.order == 3) {
        const CubicSymbolicData csd = cubic_symbolic_data(spec);
        for (const Cplx& x0 : sample_points) {
            const CubicRoots roots = cubic_roots_at(csd, x0);
            if (roots.degenerate || !roots_well_separated(roots.lambda.data(), 3)) {
                ++rep.filtered;
                continue;
            }
            const Cplx w0 = spec.initial[0](x0), w1 = spec.initial[1](x0), w2 = spec.initial[2](x0);
            const auto ells = cramer_numerators(roots, w0, w1, w2);
            std::array<Cplx, 3> weight;
            for (int i = 0; i < 3; ++i) weight[static_cast<size_t>(i)] = ells[static_cast<size_t>(i)] / roots.delta;
            std::array<Cplx, 3> pw = {1.0, 1.0, 1.0};
            for (long long n = 0; n <= n_max; ++n) {
                Cplx pred = 0;
                for (int i = 0; i < 3; ++i) pred += weight[static_cast<size_t>(i)] * pw[static_cast<size_t>(i)];
                const Cplx actual = eval_term(terms[static_cast<size_t>(n)], x0);
                rep.max_deviation = std::max(rep.max_deviation, mixed(pred - actual, std::abs(actual)));
                for (int i = 0; i < 3; ++i) pw[static_cast<size_t>(i)] *= roots.lambda[static_cast<size_t>(i)];
            }
            ++rep.used;
        }
    } else {
        const Poly& a1 = spec.coeffs[0];
        const Poly& a0 = spec.coeffs[1];
        for (const Cplx& x0 : sample_points) {
            const Cplx va1 = a1(x0), va0 = a0(x0);
            const Cplx disc = va1 * va1 + 4.0 * va0;
            if (std::abs(disc) <= kDegenerateEps * (1.0 + std::abs(va1) * std::abs(va1) + std::abs(va0))) {
                ++rep.filtered;
                continue;
            }
            const Cplx s = std::sqrt(disc);
            const Cplx alpha1 = (va1 - s) / 2.0;
            const Cplx alpha2 = (va1 + s) / 2.0;
            const std::array<Cplx, 2> alphas = {alpha1, alpha2};
            if (!roots_well_separated(alphas.data(), 2)) {
                ++rep.filtered;
                continue;
            }
            const Cplx u0 = spec.initial[0](x0), u1 = spec.initial[1](x0);
            const Cplx sigma1 = (u1 - u0 * alpha2) / (alpha1 - alpha2);
            const Cplx sigma2 = (u0 * alpha1 - u1) / (alpha1 - alpha2);
            Cplx p1 = 1.0, p2 = 1.0;
            for (long long n = 0; n <= n_max; ++n) {
                const Cplx pred = sigma1 * p1 + sigma2 * p2;
                const Cplx actual = eval_term(terms[static_cast<size_t>(n)], x0);
                rep.max_deviation = std::max(rep.max_deviation, mixed(pred - actual, std::abs(actual)));
                p1 *= alpha1;
                p2 *= alpha2;
            }
            ++rep.used;
        }
    }
    if (rep.used == 0) throw std::invalid_argument("no valid sample points");
    rep.ok = rep.max_deviation <= tol;
    return rep;
}

std::pair<Poly, Poly> w_bracket_polys(const RecurrenceSpec& spec) {
    validate_spec_shape(spec);
    if (spec.order != 3) throw std::invalid_argument("w_bracket_polys: order must be 3");
    const Poly &a = spec.coeffs[0], &b = spec.coeffs[1], &c = spec.coeffs[2];
    const Poly &w0 = spec.initial[0], &w1 = spec.initial[1], &w2 = spec.initial[2];

    // prod over roots of (w0 l^2 + (w1 - a w0) l + (w2 - a w1 - b w0)),
    // expanded through elementary symmetric functions of the cubic.
    const Poly A = w0;
    const Poly B = w1 - a * w0;
    const Poly C = w2 - a * w1 - b * w0;
    const Poly bracket = c * c * (A * A * A) - b * c * (A * A * B) +
                         (b * b - Rational(2) * a * c) * (A * A * C) + a * c * (A * B * B) -
                         (a * b + Rational(3) * c) * (A * B * C) +
                         (a * a + Rational(2) * b) * (A * C * C) + c * (B * B * B) -
                         b * (B * B * C) + a * (B * C * C) + C * C * C;

    const Poly printed = w2 * w2 * w2 + Rational(2) * a * w1 * w2 * w2 + b * w0 * w2 * w2 +
                         (a * a + b) * w1 * w1 * w2 + (a * b + Rational(3) * c) * w0 * w1 * w2 +
                         a * c * w0 * w0 * w2 + (a * b - c) * w1 * w1 * w1 +
                         (b * b + a * c) * w1 * w1 * w0 + Rational(2) * b * c * w0 * w0 * w1 +
                         c * w0 * w0 * w0;
    return {bracket, printed};
}

WFormulaData build_w_formulas(const RecurrenceSpec& spec, const std::vector<Cplx>& sample_points,
                              double tol) {
    const CubicSymbolicData csd = cubic_symbolic_data(spec);
    WFormulaData out;
    auto [bracket, printed] = w_bracket_polys(spec);
    out.bracket = bracket;
    out.bracket_printed = printed;
    out.printed_matches = bracket == printed;
    if (!out.printed_matches)
        out.notes.push_back(
            "the traditional 10-term expansion disagrees with the Cramer product; the "
            "symmetric-function expansion is the one satisfying l1 l2 l3 = -Delta B");
    long long used = 0;
    for (const Cplx& x0 : sample_points) {
        const CubicRoots roots = cubic_roots_at(csd, x0);
        if (roots.degenerate) continue;
        const Cplx w0 = spec.initial[0](x0), w1 = spec.initial[1](x0), w2 = spec.initial[2](x0);
        const auto ells = cramer_numerators(roots, w0, w1, w2);
        const Cplx prod = ells[0] * ells[1] * ells[2];
        const Cplx rhs = roots.delta * out.bracket(x0);
        out.product_identity_residual =
            std::max(out.product_identity_residual, mixed(prod + rhs, std::abs(prod)));
        ++used;
    }
    if (used == 0) throw std::invalid_argument("no valid sample points");
    out.identity_ok = out.product_identity_residual <= tol;
    return out;
}

}  // namespace powersum
