#ifndef POWERSUM_VALUATION_HPP
#define POWERSUM_VALUATION_HPP

#include "powersum/factorization.hpp"
#include "powersum/ratfunc.hpp"

#include <string>
#include <vector>

namespace powersum {

// A place of the rational function field: either the infinite place or a
// finite place indexed by a monic nonconstant polynomial.  A finite place of
// degree k bundles the k conjugate complex places, which all carry the same
// valuation; every sum used here weights by that degree.  The tag records
// whether the indexing polynomial was verified irreducible.
struct Place {
    bool at_infinity = false;
    Poly prime;  // monic, nonconstant; empty for the infinite place
    Irreducibility tag = Irreducibility::Irreducible;
    std::string tag_method;

    static Place infinity();
    static Place finite(Poly prime, Irreducibility tag, std::string method);

    long long degree() const { return at_infinity ? 1 : prime.deg(); }
    bool operator==(const Place& o) const {
        return at_infinity == o.at_infinity && prime == o.prime;
    }
};

// Finite places sorted canonically, infinity last.
bool place_less(const Place& a, const Place& b);

// Order of vanishing of f at the place; poles are negative.  f nonzero.
long long valuation(const RatFunc& f, const Place& place);
long long valuation(const RatFunc& f, const Poly& prime);
long long valuation_at_infinity(const RatFunc& f);

// Height, with the conventional H(0) = infinity available as a distinguished
// value at the API boundary; arithmetic never produces it implicitly.
class HeightValue {
public:
    static HeightValue finite(long long v) { return HeightValue(false, v); }
    static HeightValue infinite() { return HeightValue(true, 0); }

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_) throw std::logic_error("HeightValue: value() on infinite");
        return v_;
    }
    bool operator==(const HeightValue& o) const = default;

private:
    HeightValue(bool inf, long long v) : infinite_(inf), v_(v) {}
    bool infinite_;
    long long v_;
};

std::string to_string(const HeightValue& h);

struct SupportOptions {
    bool tag_irreducibility = true;
    FactorOptions factor_options;
};

struct SupportEntry {
    Place place;
    long long valuation;
};

// Places of nonzero valuation, canonical order, infinity included when its
// valuation is nonzero.  Finite places come from a coprime squarefree basis
// of numerator and denominator, refined by factoring within the degree cap.
std::vector<SupportEntry> support(const RatFunc& f, const SupportOptions& opts = {});

// Pole count: H(f) = -sum min{0, v(f)} = max(deg num, deg den).  f nonzero.
HeightValue height(const RatFunc& f);

// The same height computed by place enumeration; the redundancy is an oracle.
long long height_by_places(const RatFunc& f, const SupportOptions& opts = {});

// Projective tuple height H(u_1, ..., u_n) = -sum over places of
// min{v(u_i)}, zero entries ignored (v(0) = +infinity); at least one entry
// must be nonzero.  H(1, f) = H(f).
HeightValue height_tuple(const std::vector<RatFunc>& fs, const SupportOptions& opts = {});

struct JointSupportRow {
    Place place;
    std::vector<long long> valuations;
};

// Rows for every place where some function has nonzero valuation; all
// functions must be nonzero.
std::vector<JointSupportRow> joint_support(const std::vector<RatFunc>& fs,
                                           const SupportOptions& opts = {});

struct SumFormulaReport {
    std::vector<SupportEntry> entries;
    long long weighted_sum;  // finite valuations weighted by place degree, plus infinity
    bool holds;
};

// The sum formula: degree-weighted valuations over the support sum to zero.
SumFormulaReport check_sum_formula(const RatFunc& f, const SupportOptions& opts = {});

struct HeightEqualityReport {
    bool sum_applicable = false;   // guarantees H(f+g) = H(f) + H(g)
    bool sum_equality = false;     // whether the equality in fact holds
    bool prod_applicable = false;  // guarantees H(fg) = H(f) + H(g)
    bool prod_equality = false;
    std::vector<JointSupportRow> rows;  // joint support of f and g
    std::vector<std::string> notes;
};

// Sufficient conditions for exact height additivity, checked on the joint
// support: for the sum, v(f) != v(g) and max{v(f), v(g)} >= 0 everywhere;
// for the product, v(f) v(g) > 0 everywhere.  f, g nonzero.
HeightEqualityReport check_height_equality_conditions(const RatFunc& f, const RatFunc& g,
                                                      const SupportOptions& opts = {});

}  // namespace powersum

#endif
