#include "powersum/bounds.hpp"
#include "powersum/cheb_dickson.hpp"
#include "powersum/decompose.hpp"
#include "powersum/polyio.hpp"
#include "powersum/recurrence.hpp"
#include "powersum/spec_file.hpp"
#include "powersum/standard_pairs.hpp"
#include "powersum/valuation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using powersum::Poly;
using powersum::RatFunc;
using powersum::Rational;
using powersum::RecurrenceSpec;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;

std::string rat_str(const Rational& r) { return powersum::to_string(r); }

void print_text(const ordered_json& j, const std::string& prefix) {
    if (j.is_object()) {
        if (j.empty()) {
            std::cout << prefix << " = {}\n";
            return;
        }
        for (const auto& [key, value] : j.items())
            print_text(value, prefix.empty() ? key : prefix + "." + key);
    } else if (j.is_array()) {
        if (j.empty()) {
            std::cout << prefix << " = []\n";
            return;
        }
        size_t i = 0;
        for (const auto& value : j) print_text(value, prefix + "[" + std::to_string(i++) + "]");
    } else if (j.is_string()) {
        std::cout << prefix << " = " << j.get<std::string>() << "\n";
    } else {
        std::cout << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const std::string& command, const ordered_json& inputs, const ordered_json& results,
          const std::vector<std::string>& caveats, int exit_code, const std::string& format) {
    ordered_json env;
    env["schema"] = "powersum-lab/1";
    env["command"] = command;
    env["inputs"] = inputs;
    env["results"] = results;
    env["caveats"] = caveats;
    env["exit_code"] = exit_code;
    if (format == "json")
        std::cout << env.dump(2) << "\n";
    else
        print_text(env, "");
}

ordered_json spec_echo(const RecurrenceSpec& spec) {
    return ordered_json::parse(powersum::save_spec(spec));
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    const Poly p = powersum::parse_poly(text);
    if (p.deg() > 0) throw std::invalid_argument(what + ": expected a rational constant");
    return p.coeff(0);
}

ordered_json place_json(const powersum::Place& place) {
    ordered_json j;
    j["place"] = place.at_infinity ? "infinity" : powersum::print_poly(place.prime);
    j["degree"] = place.degree();
    if (!place.at_infinity) {
        j["irreducibility"] = powersum::to_string(place.tag);
        j["method"] = place.tag_method;
    }
    return j;
}

// ---- subcommand bodies --------------------------------------------------

int cmd_terms(const std::string& spec_path, long long max_n, const std::string& format) {
    const RecurrenceSpec spec = powersum::load_spec_file(spec_path);
    const auto terms = powersum::generate_terms(spec, max_n);
    ordered_json inputs;
    inputs["spec"] = spec_echo(spec);
    inputs["max_n"] = max_n;
    ordered_json results;
    results["terms"] = ordered_json::array();
    for (const auto& t : terms) results["terms"].push_back(powersum::print_poly(t));
    std::vector<std::string> caveats;
    int code = kOk;
    if (spec.power_sum) {
        const auto rep = powersum::check_power_sum_consistency(spec, std::max<long long>(10, max_n));
        results["power_sum_consistent"] = rep.ok;
        if (!rep.ok) {
            code = kFalse;
            results["first_mismatch"] = rep.first_mismatch;
        }
        for (const auto& d : rep.details) caveats.push_back(d);
    }
    emit("terms", inputs, results, caveats, code, format);
    return code;
}

int cmd_check_structure(const std::string& spec_path, long long n, const std::string& format) {
    const RecurrenceSpec spec = powersum::load_spec_file(spec_path);
    if (!spec.power_sum)
        throw std::invalid_argument("check-structure: the spec carries no power_sum part");
    const auto rep = powersum::check_desired_structure(*spec.power_sum, n);
    ordered_json inputs;
    inputs["spec"] = spec_echo(spec);
    inputs["n"] = n;
    ordered_json results;
    results["dominant_root_ok"] = rep.dominant_root_ok;
    results["coeff_degree_ok"] = rep.coeff_degree_ok;
    results["excluded_binary_form_ok"] = rep.excluded_binary_form_ok;
    results["eta_vanishing_ok"] = rep.eta_vanishing_ok;
    results["all_ok"] = rep.all_ok;
    results["ell"] = rep.ell;
    results["eta_top"] = rat_str(rep.eta_top);
    results["eta_1"] = rat_str(rep.eta_1);
    results["eta_2"] = rat_str(rep.eta_2);
    const int code = rep.all_ok ? kOk : kFalse;
    emit("check-structure", inputs, results, rep.details, code, format);
    return code;
}

int cmd_verify_roots(const std::string& spec_path, long long max_n, double tol,
                     unsigned long long seed, const std::string& format) {
    const RecurrenceSpec spec = powersum::load_spec_file(spec_path);
    const auto points = powersum::default_sample_points(8, seed);
    ordered_json inputs;
    inputs["spec"] = spec_echo(spec);
    inputs["max_n"] = max_n;
    inputs["tol"] = tol;
    inputs["seed"] = seed;
    inputs["samples"] = 8;
    ordered_json results;
    std::vector<std::string> caveats;
    bool ok = true;

    if (spec.order == 3) {
        const auto cardano = powersum::cardano_verify(spec, points, tol);
        double max_char = 0, max_e1 = 0, max_e2 = 0, max_e3 = 0, max_delta = 0;
        for (const auto& s : cardano.samples) {
            if (s.degenerate) continue;
            max_char = std::max(max_char, s.char_residual);
            max_e1 = std::max(max_e1, s.vieta_e1_residual);
            max_e2 = std::max(max_e2, s.vieta_e2_residual);
            max_e3 = std::max(max_e3, s.vieta_e3_residual);
            max_delta = std::max(max_delta, s.delta_identity_residual);
        }
        ordered_json cj;
        cj["used"] = cardano.used;
        cj["filtered"] = cardano.filtered;
        cj["max_char_residual"] = max_char;
        cj["max_vieta_e1_residual"] = max_e1;
        cj["max_vieta_e2_residual"] = max_e2;
        cj["max_vieta_e3_residual"] = max_e3;
        cj["max_delta_identity_residual"] = max_delta;
        cj["ok"] = cardano.ok;
        results["cardano"] = cj;
        for (const auto& note : cardano.notes) caveats.push_back(note);
        ok = ok && cardano.ok;

        const auto wf = powersum::build_w_formulas(spec, points, tol);
        ordered_json wj;
        wj["bracket"] = powersum::print_poly(wf.bracket);
        wj["bracket_printed"] = powersum::print_poly(wf.bracket_printed);
        wj["printed_matches"] = wf.printed_matches;
        wj["product_identity_residual"] = wf.product_identity_residual;
        wj["ok"] = wf.identity_ok;
        results["w_formulas"] = wj;
        for (const auto& note : wf.notes) caveats.push_back(note);
        ok = ok && wf.identity_ok;
    } else {
        caveats.push_back("closed-form root verification runs the order-2 form only");
    }

    const auto binet = powersum::binet_verify(spec, points, max_n, tol);
    ordered_json bj;
    bj["n_max"] = binet.n_max;
    bj["used"] = binet.used;
    bj["filtered"] = binet.filtered;
    bj["max_deviation"] = binet.max_deviation;
    bj["ok"] = binet.ok;
    results["binet"] = bj;
    ok = ok && binet.ok;

    const int code = ok ? kOk : kFalse;
    emit("verify-roots", inputs, results, caveats, code, format);
    return code;
}

int cmd_decompose(const std::string& poly_expr, const std::string& format) {
    const Poly p = powersum::parse_poly(poly_expr);
    if (p.deg() < 1) throw std::invalid_argument("decompose: polynomial must be nonconstant");
    const auto chain = powersum::full_decomposition(p);
    Poly check(Rational(0));
    bool first = true;
    for (const auto& part : chain) {
        check = first ? part : check.compose(part);
        first = false;
    }
    if (check != p) throw std::logic_error("decompose: chain does not recompose");
    ordered_json inputs;
    inputs["poly"] = powersum::print_poly(p);
    ordered_json results;
    results["chain"] = ordered_json::array();
    for (const auto& part : chain) results["chain"].push_back(powersum::print_poly(part));
    results["indecomposable"] = chain.size() == 1;
    emit("decompose", inputs, results, {}, kOk, format);
    return kOk;
}

int cmd_classify(const std::string& poly_expr, const std::string& format) {
    const Poly p = powersum::parse_poly(poly_expr);
    const auto tag = powersum::classify_shape(p);
    ordered_json inputs;
    inputs["poly"] = powersum::print_poly(p);
    ordered_json results;
    results["kind"] = powersum::to_string(tag.kind);
    results["n"] = tag.n;
    results["l1"] = tag.l1 ? ordered_json(powersum::print_poly(*tag.l1)) : ordered_json(nullptr);
    results["l2"] = tag.l2 ? ordered_json(powersum::print_poly(*tag.l2)) : ordered_json(nullptr);
    std::vector<std::string> caveats;
    if (!tag.note.empty()) caveats.push_back(tag.note);
    emit("classify", inputs, results, caveats, kOk, format);
    return kOk;
}

int cmd_find_outer_q(const std::string& outer_expr, const std::string& target_expr,
                     const std::string& format) {
    const Poly u = powersum::parse_poly(outer_expr);
    const Poly v = powersum::parse_poly(target_expr);
    const auto q = powersum::solve_outer(u, v);
    ordered_json inputs;
    inputs["outer"] = powersum::print_poly(u);
    inputs["target"] = powersum::print_poly(v);
    ordered_json results;
    std::vector<std::string> caveats;
    int code = kOk;
    if (q) {
        results["q"] = powersum::print_poly(*q);
    } else {
        results["q"] = nullptr;
        caveats.push_back("none over ℚ");
        code = kFalse;
    }
    emit("find-outer-q", inputs, results, caveats, code, format);
    return code;
}

int cmd_identities(const std::string& family, long long max_n, const std::string& format) {
    if (max_n < 1 || max_n > 64)
        throw std::invalid_argument("identities: --max-n must lie in [1, 64]");
    const std::vector<Rational> r_set = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                         Rational(3, 2)};
    ordered_json inputs;
    inputs["family"] = family;
    inputs["max_n"] = max_n;
    ordered_json results;
    bool all_ok = true;

    auto run_family = [&](const std::string& name, auto&& body) {
        if (family != "all" && family != name) return;
        long long checked = 0;
        ordered_json failures = ordered_json::array();
        body(checked, failures);
        ordered_json fj;
        fj["checked"] = checked;
        fj["failures"] = failures;
        results[name] = fj;
        if (!failures.empty()) all_ok = false;
    };

    run_family("chebyshev", [&](long long& checked, ordered_json& failures) {
        for (long long m = 1; m <= max_n; ++m)
            for (long long n = 1; m * n <= max_n; ++n) {
                ++checked;
                if (!powersum::verify_chebyshev_composition(m, n))
                    failures.push_back(ordered_json{{"m", m}, {"n", n}});
            }
    });
    run_family("dickson", [&](long long& checked, ordered_json& failures) {
        for (long long k = 1; k <= max_n; ++k)
            for (long long l = 1; k * l <= max_n; ++l)
                for (const auto& r : r_set) {
                    ++checked;
                    if (!powersum::verify_dickson_composition(k, l, r))
                        failures.push_back(ordered_json{{"k", k}, {"l", l}, {"r", rat_str(r)}});
                }
        for (long long n = 1; n <= std::min<long long>(max_n, 12); ++n)
            for (const auto& r : r_set) {
                ++checked;
                if (!powersum::dickson_functional_identity_check(n, r))
                    failures.push_back(ordered_json{{"n", n}, {"r", rat_str(r)}, {"law", "y + r/y"}});
            }
    });
    run_family("product", [&](long long& checked, ordered_json& failures) {
        for (long long n = 1; n <= max_n; ++n)
            for (long long m = 1; m <= n; ++m)
                for (long long k = 1; (n + m) * k <= max_n; ++k) {
                    ++checked;
                    if (!powersum::verify_chebyshev_product(n, m, k))
                        failures.push_back(ordered_json{{"n", n}, {"m", m}, {"k", k}});
                }
    });
    run_family("bridge", [&](long long& checked, ordered_json& failures) {
        for (long long n = 0; n <= max_n; ++n) {
            ++checked;
            if (!powersum::verify_chebyshev_dickson_bridge(n))
                failures.push_back(ordered_json{{"n", n}});
        }
    });

    if (results.empty()) throw std::invalid_argument("identities: unknown family " + family);
    results["all_ok"] = all_ok;
    const int code = all_ok ? kOk : kFalse;
    emit("identities", inputs, results, {}, code, format);
    return code;
}

int cmd_height(const std::string& poly_expr, const std::string& format) {
    const RatFunc f = powersum::parse_ratfunc(poly_expr);
    ordered_json inputs;
    inputs["poly"] = powersum::print_ratfunc(f);
    ordered_json results;
    std::vector<std::string> caveats;
    if (f.is_zero()) {
        results["height"] = "infinity";
        caveats.push_back("the zero function has infinite height");
        emit("height", inputs, results, caveats, kOk, format);
        return kOk;
    }
    const auto h = powersum::height(f);
    const long long by_places = powersum::height_by_places(f);
    if (h.value() != by_places) throw std::logic_error("height: place enumeration disagrees");
    results["height"] = h.value();
    const auto sup = powersum::support(f);
    results["support"] = ordered_json::array();
    for (const auto& entry : sup) {
        ordered_json e = place_json(entry.place);
        e["valuation"] = entry.valuation;
        results["support"].push_back(e);
        if (entry.place.tag == powersum::Irreducibility::Unverified)
            caveats.push_back("a support place of degree " + std::to_string(entry.place.degree()) +
                              " was not verified irreducible (" + entry.place.tag_method + ")");
    }
    const auto sum_rep = powersum::check_sum_formula(f);
    results["sum_formula_holds"] = sum_rep.holds;
    if (!sum_rep.holds) throw std::logic_error("height: sum formula violated");
    emit("height", inputs, results, caveats, kOk, format);
    return kOk;
}

int cmd_valuation(const std::string& poly_expr, const std::string& target_expr,
                  const std::string& format) {
    const RatFunc f = powersum::parse_ratfunc(poly_expr);
    if (f.is_zero())
        throw std::invalid_argument("valuation: the zero function has no valuations");
    ordered_json inputs;
    inputs["poly"] = powersum::print_ratfunc(f);
    ordered_json results;
    std::vector<std::string> caveats;
    if (!target_expr.empty()) {
        const Poly t = powersum::parse_poly(target_expr);
        if (t.deg() < 1) throw std::invalid_argument("valuation: target must be nonconstant");
        inputs["target"] = powersum::print_poly(t);
        const auto rep = powersum::test_irreducible(t.monic());
        results["target"] = powersum::print_poly(t.monic());
        results["irreducibility"] = powersum::to_string(rep.verdict);
        results["valuation"] = powersum::valuation(f, t.monic());
        if (rep.verdict == powersum::Irreducibility::Reducible)
            caveats.push_back(
                "target is reducible; the reported number is its exact division multiplicity, "
                "not a place valuation");
        else if (rep.verdict == powersum::Irreducibility::Unverified)
            caveats.push_back("target was not verified irreducible (" + rep.method + ")");
    } else {
        const auto sup = powersum::support(f);
        results["support"] = ordered_json::array();
        for (const auto& entry : sup) {
            ordered_json e = place_json(entry.place);
            e["valuation"] = entry.valuation;
            results["support"].push_back(e);
        }
        const auto sum_rep = powersum::check_sum_formula(f);
        results["sum_formula_holds"] = sum_rep.holds;
    }
    emit("valuation", inputs, results, caveats, kOk, format);
    return kOk;
}

int cmd_standard_pair(const std::string& spec_path, const std::string& format) {
    std::ifstream in(spec_path);
    if (!in) throw std::invalid_argument("standard-pair: cannot open " + spec_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    ordered_json doc = ordered_json::parse(buffer.str());
    if (!doc.is_object()) throw std::invalid_argument("standard-pair: witness file must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "kind" && key != "params" && key != "witness")
            throw std::invalid_argument("standard-pair: unknown key " + key);
    }
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::invalid_argument("standard-pair: missing kind");
    const auto kind = powersum::pair_kind_from_string(doc["kind"].get<std::string>());

    powersum::PairParams params;
    if (doc.contains("params")) {
        const auto& pj = doc["params"];
        if (!pj.is_object()) throw std::invalid_argument("standard-pair: params must be an object");
        for (const auto& [key, value] : pj.items()) {
            if (key == "m" || key == "n") {
                if (!value.is_number_integer())
                    throw std::invalid_argument("standard-pair: " + key + " must be an integer");
                (key == "m" ? params.m : params.n) = value.get<long long>();
            } else if (key == "a" || key == "b" || key == "r") {
                Rational r;
                if (value.is_number_integer())
                    r = Rational(value.get<long long>());
                else if (value.is_string())
                    r = parse_rational_arg(value.get<std::string>(), "params." + key);
                else
                    throw std::invalid_argument("standard-pair: " + key +
                                                " must be an integer or rational string");
                (key == "a" ? params.a : key == "b" ? params.b : params.r) = r;
            } else if (key == "p") {
                if (!value.is_string())
                    throw std::invalid_argument("standard-pair: p must be a polynomial string");
                params.p = powersum::parse_poly(value.get<std::string>());
            } else {
                throw std::invalid_argument("standard-pair: unknown params key " + key);
            }
        }
    }

    const auto pair = powersum::make_standard_pair(kind, params);
    ordered_json inputs;
    inputs["kind"] = powersum::to_string(pair.kind);
    inputs["params"] = doc.contains("params") ? doc["params"] : ordered_json::object();
    ordered_json results;
    results["left"] = powersum::print_poly(pair.left);
    results["right"] = powersum::print_poly(pair.right);
    int code = kOk;
    if (doc.contains("witness")) {
        const auto& wj = doc["witness"];
        if (!wj.is_object()) throw std::invalid_argument("standard-pair: witness must be an object");
        auto need = [&](const char* key) -> Poly {
            if (!wj.contains(key) || !wj[key].is_string())
                throw std::invalid_argument(std::string("standard-pair: witness needs string ") + key);
            return powersum::parse_poly(wj[key].get<std::string>());
        };
        for (const auto& [key, value] : wj.items()) {
            (void)value;
            const std::string k = key;
            if (k != "f" && k != "g" && k != "phi" && k != "lambda" && k != "mu")
                throw std::invalid_argument("standard-pair: unknown witness key " + k);
        }
        const bool verified = powersum::verify_bilu_tichy_shape(need("f"), need("g"), need("phi"),
                                                                pair, need("lambda"), need("mu"));
        results["witness_verified"] = verified;
        code = verified ? kOk : kFalse;
    }
    emit("standard-pair", inputs, results, {}, code, format);
    return code;
}

int cmd_bounds(int theorem, const std::string& spec_path, const std::string& format) {
    const RecurrenceSpec spec = powersum::load_spec_file(spec_path);
    ordered_json inputs;
    inputs["theorem"] = theorem;
    inputs["spec"] = spec_echo(spec);
    ordered_json results;
    std::vector<std::string> caveats;
    int code = kOk;
    if (theorem == 2) {
        const auto rep = powersum::theorem2_bound(spec);
        ordered_json degrees;
        degrees["a"] = rep.deg_a;
        degrees["b"] = rep.deg_b;
        degrees["c"] = rep.deg_c;
        degrees["w0"] = rep.deg_w[0];
        degrees["w1"] = rep.deg_w[1];
        degrees["w2"] = rep.deg_w[2];
        degrees["q"] = rep.deg_q;
        degrees["disc"] = rep.deg_disc;
        degrees["bracket"] = rep.deg_bracket;
        results["degrees"] = degrees;
        ordered_json constants;
        constants["c1"] = rat_str(rep.c1);
        constants["c2"] = rat_str(rep.c2);
        constants["c3"] = rat_str(rep.c3);
        constants["c4"] = rat_str(rep.c4);
        constants["c5"] = rat_str(rep.c5);
        constants["c6_bm"] = rat_str(rep.c6_bm);
        constants["c6_root"] = rat_str(rep.c6_root);
        constants["c7"] = rat_str(rep.c7);
        constants["c8"] = rat_str(rep.c8);
        constants["c9"] = rat_str(rep.c9);
        constants["c10"] = rat_str(rep.c10);
        constants["c11"] = rat_str(rep.c11);
        constants["c12"] = rat_str(rep.c12);
        results["constants"] = constants;
        results["genus_bound_coeff"] = rat_str(rep.genus_bound_coeff);
        results["s_bound_coeff"] = rat_str(rep.s_bound_coeff);
        results["p1_height_coeff"] = rat_str(rep.p1_height_coeff);
        results["final_degree_bound"] = rat_str(rep.final_degree_bound);
        ordered_json hyp;
        hyp["disc_degree"] = rep.hyp_disc_degree;
        hyp["q_degree"] = rep.hyp_q_degree;
        hyp["product_degree"] = rep.hyp_product_degree;
        hyp["all"] = rep.hypotheses_ok;
        results["hypotheses"] = hyp;
        results["valid"] = rep.valid;
        if (!rep.valid) {
            results["invalid_reason"] = rep.invalid_reason;
            code = kFalse;
        }
        caveats = rep.caveats;
    } else {
        const auto rep = powersum::theorem3_bound(spec);
        ordered_json degrees;
        degrees["a1"] = rep.deg_a1;
        degrees["a0"] = rep.deg_a0;
        degrees["u0"] = rep.deg_u0;
        degrees["u1"] = rep.deg_u1;
        results["degrees"] = degrees;
        results["c13"] = rep.c13;
        results["c14"] = rep.c14;
        results["c"] = rep.c.str();
        results["degenerate"] = rep.degenerate;
        caveats = rep.notes;
    }
    emit("bounds", inputs, results, caveats, code, format);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for polynomial power-sum recurrences"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string spec_path, poly_expr, outer_expr, target_expr, family = "all";
    long long n_val = 3, max_n_terms = 10, max_n_roots = 12, max_n_ident = 16;
    int theorem = 2;
    double tol = 1e-8;
    unsigned long long seed = 0;

    const auto format_check = CLI::IsMember({"json", "text"});

    auto* terms = app.add_subcommand("terms", "Generate recurrence terms exactly");
    terms->add_option("--spec", spec_path, "Recurrence spec file")->required();
    terms->add_option("--max-n", max_n_terms, "Last index to generate");
    terms->add_option("--format", format, "Output format")->check(format_check);

    auto* checks = app.add_subcommand("check-structure", "Structural assumptions on the power sum");
    checks->add_option("--spec", spec_path, "Recurrence spec file with power_sum")->required();
    checks->add_option("--n", n_val, "Index n >= 3 at which to expand");
    checks->add_option("--format", format, "Output format")->check(format_check);

    auto* roots = app.add_subcommand("verify-roots", "Closed-form root and weight verification");
    roots->add_option("--spec", spec_path, "Recurrence spec file")->required();
    roots->add_option("--max-n", max_n_roots, "Binet depth");
    roots->add_option("--tol", tol, "Mixed tolerance");
    roots->add_option("--seed", seed, "Sample point seed");
    roots->add_option("--format", format, "Output format")->check(format_check);

    auto* dec = app.add_subcommand("decompose", "Complete functional decomposition");
    dec->add_option("--poly", poly_expr, "Polynomial expression")->required();
    dec->add_option("--format", format, "Output format")->check(format_check);

    auto* cls = app.add_subcommand("classify", "Cyclic/dihedral shape classification");
    cls->add_option("--poly", poly_expr, "Polynomial expression")->required();
    cls->add_option("--format", format, "Output format")->check(format_check);

    auto* foq = app.add_subcommand("find-outer-q", "Solve U(Q) = V for Q over the rationals");
    foq->add_option("--outer", outer_expr, "Outer polynomial U")->required();
    foq->add_option("--target", target_expr, "Target polynomial V")->required();
    foq->add_option("--format", format, "Output format")->check(format_check);

    auto* idc = app.add_subcommand("identities", "Chebyshev/Dickson identity suites");
    idc->add_option("--family", family, "Identity family")
        ->check(CLI::IsMember({"all", "chebyshev", "dickson", "product", "bridge"}));
    idc->add_option("--max-n", max_n_ident, "Index budget");
    idc->add_option("--format", format, "Output format")->check(format_check);

    auto* hgt = app.add_subcommand("height", "Projective height and support of a rational function");
    hgt->add_option("--poly", poly_expr, "Rational function expression")->required();
    hgt->add_option("--format", format, "Output format")->check(format_check);

    auto* val = app.add_subcommand("valuation", "Valuations of a rational function");
    val->add_option("--poly", poly_expr, "Rational function expression")->required();
    val->add_option("--target", target_expr, "Finite place (monic polynomial)");
    val->add_option("--format", format, "Output format")->check(format_check);

    auto* stp = app.add_subcommand("standard-pair", "Construct and verify a standard pair");
    stp->add_option("--spec", spec_path, "Witness JSON file")->required();
    stp->add_option("--format", format, "Output format")->check(format_check);

    auto* bnd = app.add_subcommand("bounds", "Explicit degree-bound constant chains");
    bnd->add_option("--theorem", theorem, "Which chain")->required()->check(CLI::IsMember({2, 3}));
    bnd->add_option("--spec", spec_path, "Recurrence spec file")->required();
    bnd->add_option("--format", format, "Output format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (terms->parsed()) return cmd_terms(spec_path, max_n_terms, format);
        if (checks->parsed()) return cmd_check_structure(spec_path, n_val, format);
        if (roots->parsed()) return cmd_verify_roots(spec_path, max_n_roots, tol, seed, format);
        if (dec->parsed()) return cmd_decompose(poly_expr, format);
        if (cls->parsed()) return cmd_classify(poly_expr, format);
        if (foq->parsed()) return cmd_find_outer_q(outer_expr, target_expr, format);
        if (idc->parsed()) return cmd_identities(family, max_n_ident, format);
        if (hgt->parsed()) return cmd_height(poly_expr, format);
        if (val->parsed()) return cmd_valuation(poly_expr, target_expr, format);
        if (stp->parsed()) return cmd_standard_pair(spec_path, format);
        if (bnd->parsed()) return cmd_bounds(theorem, spec_path, format);
    } catch (const powersum::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const powersum::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
