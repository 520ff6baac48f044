#include "powersum/valuation.hpp"

#include <algorithm>

namespace powersum {

namespace {

// Finite places underlying a family of rational functions: coprime
// squarefree basis of all numerators and denominators, each element either
// verified irreducible or split further and tagged.
std::vector<Place> finite_places(const std::vector<const RatFunc*>& fs, const SupportOptions& opts) {
    std::vector<Poly> gens;
    for (const RatFunc* f : fs) {
        gens.push_back(f->num());
        gens.push_back(f->den());
    }
    std::vector<Place> places;
    for (const Poly& b : coprime_basis(gens)) {
        if (!opts.tag_irreducibility) {
            places.push_back(Place::finite(b,
                                           b.deg() == 1 ? Irreducibility::Irreducible
                                                        : Irreducibility::Unverified,
                                           b.deg() == 1 ? "degree" : "skipped"));
            continue;
        }
        const Factorization fac = factor(b, opts.factor_options);
        for (const auto& part : fac.parts)
            places.push_back(Place::finite(part.factor, part.tag, ""));
    }
    for (auto& p : places) {
        if (p.tag_method.empty()) p.tag_method = to_string(p.tag);
    }
    std::sort(places.begin(), places.end(), place_less);
    return places;
}

}  // namespace

Place Place::infinity() {
    Place p;
    p.at_infinity = true;
    p.tag = Irreducibility::Irreducible;
    p.tag_method = "infinite-place";
    return p;
}

Place Place::finite(Poly prime, Irreducibility tag, std::string method) {
    if (prime.deg() < 1) throw std::domain_error("Place: finite place needs a nonconstant polynomial");
    Place p;
    p.at_infinity = false;
    p.prime = prime.monic();
    p.tag = tag;
    p.tag_method = std::move(method);
    return p;
}

bool place_less(const Place& a, const Place& b) {
    if (a.at_infinity != b.at_infinity) return b.at_infinity;
    if (a.at_infinity) return false;
    return poly_less(a.prime, b.prime);
}

long long valuation(const RatFunc& f, const Place& place) {
    if (f.is_zero()) throw std::domain_error("valuation of zero undefined");
    if (place.at_infinity) return f.den().deg() - f.num().deg();
    return multiplicity(place.prime, f.num()) - multiplicity(place.prime, f.den());
}

long long valuation(const RatFunc& f, const Poly& prime) {
    return valuation(f, Place::finite(prime, Irreducibility::Unverified, "caller"));
}

long long valuation_at_infinity(const RatFunc& f) { return valuation(f, Place::infinity()); }

std::string to_string(const HeightValue& h) {
    return h.is_infinite() ? "infinity" : std::to_string(h.value());
}

std::vector<SupportEntry> support(const RatFunc& f, const SupportOptions& opts) {
    if (f.is_zero()) throw std::domain_error("support: zero function");
    std::vector<SupportEntry> out;
    for (const Place& p : finite_places({&f}, opts)) {
        const long long v = valuation(f, p);
        if (v != 0) out.push_back({p, v});
    }
    const long long vinf = valuation_at_infinity(f);
    if (vinf != 0) out.push_back({Place::infinity(), vinf});
    return out;
}

HeightValue height(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("height of zero is infinite");
    return HeightValue::finite(std::max(f.num().deg(), f.den().deg()));
}

long long height_by_places(const RatFunc& f, const SupportOptions& opts) {
    if (f.is_zero()) throw std::domain_error("height of zero is infinite");
    long long h = 0;
    for (const auto& e : support(f, opts))
        if (e.valuation < 0) h += -e.valuation * e.place.degree();
    return h;
}

std::vector<JointSupportRow> joint_support(const std::vector<RatFunc>& fs,
                                           const SupportOptions& opts) {
    std::vector<const RatFunc*> ptrs;
    for (const auto& f : fs) {
        if (f.is_zero()) throw std::domain_error("joint_support: zero function");
        ptrs.push_back(&f);
    }
    if (ptrs.empty()) throw std::domain_error("joint_support: empty family");
    std::vector<JointSupportRow> rows;
    auto add_row = [&](const Place& p) {
        JointSupportRow row{p, {}};
        bool any = false;
        for (const RatFunc* f : ptrs) {
            const long long v = valuation(*f, p);
            row.valuations.push_back(v);
            if (v != 0) any = true;
        }
        if (any) rows.push_back(std::move(row));
    };
    for (const Place& p : finite_places(ptrs, opts)) add_row(p);
    add_row(Place::infinity());
    return rows;
}

HeightValue height_tuple(const std::vector<RatFunc>& fs, const SupportOptions& opts) {
    if (fs.empty()) throw std::domain_error("height_tuple: empty tuple");
    std::vector<RatFunc> nz;
    for (const auto& f : fs)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty()) throw std::domain_error("height_tuple: all entries zero");
    long long h = 0;
    for (const auto& row : joint_support(nz, opts)) {
        const long long m = *std::min_element(row.valuations.begin(), row.valuations.end());
        h -= m * row.place.degree();
    }
    return HeightValue::finite(h);
}

SumFormulaReport check_sum_formula(const RatFunc& f, const SupportOptions& opts) {
    SumFormulaReport rep;
    rep.entries = support(f, opts);
    rep.weighted_sum = 0;
    bool saw_infinity = false;
    for (const auto& e : rep.entries) {
        rep.weighted_sum += e.valuation * e.place.degree();
        saw_infinity = saw_infinity || e.place.at_infinity;
    }
    if (!saw_infinity) rep.weighted_sum += valuation_at_infinity(f);
    rep.holds = rep.weighted_sum == 0;
    return rep;
}

HeightEqualityReport check_height_equality_conditions(const RatFunc& f, const RatFunc& g,
                                                      const SupportOptions& opts) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("check_height_equality_conditions: zero argument");
    HeightEqualityReport rep;
    rep.rows = joint_support({f, g}, opts);
    rep.sum_applicable = true;
    rep.prod_applicable = true;
    for (const auto& row : rep.rows) {
        const long long vf = row.valuations[0], vg = row.valuations[1];
        if (vf == vg || std::max(vf, vg) < 0) rep.sum_applicable = false;
        if (vf * vg <= 0) rep.prod_applicable = false;
    }
    const long long hf = height(f).value(), hg = height(g).value();
    const RatFunc s = f + g;
    if (s.is_zero()) {
        rep.sum_applicable = false;
        rep.sum_equality = false;
        rep.notes.push_back("f + g = 0: height undefined, sum rule not applicable");
    } else {
        rep.sum_equality = height(s).value() == hf + hg;
    }
    rep.prod_equality = height(f * g).value() == hf + hg;
    return rep;
}

}  // namespace powersum
