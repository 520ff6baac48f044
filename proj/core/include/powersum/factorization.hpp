#ifndef POWERSUM_FACTORIZATION_HPP
#define POWERSUM_FACTORIZATION_HPP

#include "powersum/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powersum {

struct SquarefreeFactor {
    Poly factor;  // monic, nonconstant
    long long multiplicity;
};

// f = unit * prod factor^multiplicity with pairwise coprime squarefree factors.
struct SquarefreeDecomposition {
    Rational unit;
    std::vector<SquarefreeFactor> factors;
};

SquarefreeDecomposition squarefree_decompose(const Poly& f);

// Monic product of the distinct irreducible factors of f.
Poly squarefree_part(const Poly& f);

// Pairwise coprime monic squarefree polynomials such that every nonconstant
// input is, up to a constant, a product of powers of basis elements.
// Constant inputs are ignored.  Result sorted canonically.
std::vector<Poly> coprime_basis(const std::vector<Poly>& gens);

// Irreducibility over the rationals is decided only within configured caps;
// everything beyond is reported honestly as Unverified.
enum class Irreducibility { Irreducible, Reducible, Unverified };

std::string to_string(Irreducibility v);

struct IrreducibilityReport {
    Irreducibility verdict;
    std::string method;  // "degree", "rational-root", "mod-p", "degree-pattern", "kronecker", "degree-cap", "budget"
    std::optional<Poly> witness_factor;  // monic proper factor when Reducible
};

struct FactorOptions {
    long long irreducibility_degree_cap = 6;
    long long trial_division_budget = 200000;
    long long kronecker_combination_budget = 200000;
};

// f nonconstant.  Degree <= cap: decided via rational roots, mod-p distinct
// degree certificates and a complete Kronecker search (budget permitting).
// Degree > cap: only the cheap mod-p certificates are attempted.
IrreducibilityReport test_irreducible(const Poly& f, const FactorOptions& opts = {});

struct FactorPart {
    Poly factor;  // monic, nonconstant
    long long multiplicity;
    Irreducibility tag;
};

// f = unit * prod factor^multiplicity; factors pairwise coprime, each tagged
// Irreducible or Unverified (never Reducible).
struct Factorization {
    Rational unit;
    std::vector<FactorPart> parts;
};

Factorization factor(const Poly& f, const FactorOptions& opts = {});

// All rational roots of f, or nullopt when the divisor enumeration blows the
// trial division budget.  f nonzero.
std::optional<std::vector<Rational>> rational_roots(const Poly& f, const FactorOptions& opts = {});

}  // namespace powersum

#endif
