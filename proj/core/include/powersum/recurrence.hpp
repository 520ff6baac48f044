#ifndef POWERSUM_RECURRENCE_HPP
#define POWERSUM_RECURRENCE_HPP

#include "powersum/poly.hpp"
#include "powersum/spec_file.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace powersum {

// W_0, ..., W_max_n by running the recurrence exactly.
std::vector<Poly> generate_terms(const RecurrenceSpec& spec, long long max_n);

// sum a_i alpha_i^n, expanded exactly.  Requires pairwise distinct alpha_i.
Poly expand_power_sum(const std::vector<PowerSumTerm>& terms, long long n);

// The order-d recurrence whose characteristic roots are the alpha_i, with
// initial terms read off the power sum.
RecurrenceSpec induced_recurrence(const std::vector<PowerSumTerm>& terms);

struct ConsistencyReport {
    bool ok = true;
    long long first_mismatch = -1;
    std::vector<std::string> details;
};

// Cross-checks spec.power_sum against the recurrence terms for n <= n_max.
ConsistencyReport check_power_sum_consistency(const RecurrenceSpec& spec, long long n_max = 10);

// Structural assumptions on U_n = sum a_i alpha_i^n (first term dominant):
//   (i)   deg alpha_1 exceeds every other root degree; at most one root is
//         constant;
//   (ii)  deg a_1 >= deg a_i for all i;
//   (iii) U_n is not of the binary excluded shape (two roots, second one
//         constant, constant coefficients, dominant root an exact power of a
//         linear polynomial) -- decided for d = 2 with constant second root,
//         otherwise not applicable by shape;
//   (iv)  the two coefficients below the leading one vanish.
struct StructureReport {
    bool dominant_root_ok = false;
    bool coeff_degree_ok = false;
    bool excluded_binary_form_ok = false;
    bool eta_vanishing_ok = false;
    bool all_ok = false;
    long long ell = 0;       // deg a_1 + n deg alpha_1
    Rational eta_top;        // coefficient of x^ell
    Rational eta_1;          // coefficient of x^(ell-1)
    Rational eta_2;          // coefficient of x^(ell-2)
    std::vector<std::string> details;
};

// n >= 3; at least two terms; alpha_i pairwise distinct and nonzero.
StructureReport check_desired_structure(const std::vector<PowerSumTerm>& terms, long long n);

// Exact symbolic data of the order-3 characteristic cubic T^3 - aT^2 - bT - c:
// the depressed form S^3 - pS - q and its discriminant-like quantity
// disc = (q/2)^2 - (p/3)^3, with expected-degree bookkeeping.
struct CubicSymbolicData {
    Poly a, b, c;
    Poly p, q, disc;
    long long deg_q_expected = 0;     // 3 deg a
    long long deg_disc_expected = 0;  // 3 deg a + deg c
    bool deg_q_matches = false;
    bool deg_disc_matches = false;
    std::vector<std::string> notes;
};

CubicSymbolicData cubic_symbolic_data(const RecurrenceSpec& spec);

// Deterministic real sample points in [-4, 4], reproducible from the seed.
std::vector<std::complex<double>> default_sample_points(long long count, unsigned long long seed);

struct CardanoSample {
    std::complex<double> x0;
    std::array<std::complex<double>, 3> lambda;
    std::array<std::complex<double>, 3> w;
    double char_residual = 0;            // max over roots, mixed-normalized
    double vieta_e1_residual = 0;        // sum of roots vs a(x0)
    double vieta_e2_residual = 0;        // pair sums vs -b(x0)
    double vieta_e3_residual = 0;        // product vs +c(x0)
    double delta_identity_residual = 0;  // Delta against the discriminant root
    bool degenerate = false;             // filtered out, not counted
};

struct CardanoReport {
    std::vector<CardanoSample> samples;
    long long used = 0;
    long long filtered = 0;
    double tol = 0;
    bool ok = false;
    std::vector<std::string> notes;
};

// Closed-form roots of the characteristic cubic at each sample point, with
// residual checks; points where the discriminant (nearly) vanishes are
// filtered, and having no usable point at all is an error.
CardanoReport cardano_verify(const RecurrenceSpec& spec,
                             const std::vector<std::complex<double>>& sample_points,
                             double tol = 1e-8);

struct BinetReport {
    long long n_max = 0;
    long long used = 0;
    long long filtered = 0;
    double max_deviation = 0;  // mixed-normalized
    double tol = 0;
    bool ok = false;
};

// Compares recurrence terms against the closed form at the sample points;
// order 2 and order 3 supported.
BinetReport binet_verify(const RecurrenceSpec& spec,
                         const std::vector<std::complex<double>>& sample_points,
                         long long n_max = 12, double tol = 1e-8);

// Exact bracket polynomial B with l1 l2 l3 = -Delta B, where the l_i are the
// Cramer numerators of the Binet weights and Delta the root Vandermonde.
// `bracket` is the symmetric-function expansion (used everywhere);
// `bracket_printed` is a traditional 10-term textbook expansion retained for
// comparison, which does not match the product identity in general.
struct WFormulaData {
    Poly bracket;
    Poly bracket_printed;
    bool printed_matches = false;
    double product_identity_residual = 0;
    bool identity_ok = false;
    std::vector<std::string> notes;
};

WFormulaData build_w_formulas(const RecurrenceSpec& spec,
                              const std::vector<std::complex<double>>& sample_points,
                              double tol = 1e-8);

// Exact bracket polynomials only (no numeric verification).
std::pair<Poly, Poly> w_bracket_polys(const RecurrenceSpec& spec);

}  // namespace powersum

#endif
