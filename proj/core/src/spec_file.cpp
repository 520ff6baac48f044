#include "powersum/spec_file.hpp"

#include "powersum/polyio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace powersum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Poly parse_poly_at(const json& node, const std::string& path) {
    if (!node.is_string()) throw SpecError(path, "expected a polynomial string");
    try {
        return parse_poly(node.get<std::string>());
    } catch (const ParseError& e) {
        throw SpecError(path, e.what());
    }
}

std::vector<Poly> parse_poly_array(const json& node, const std::string& key, long long order,
                                   const std::string& base) {
    if (!node.is_array()) throw SpecError(base, "expected an array of polynomial strings");
    if (static_cast<long long>(node.size()) != order) {
        std::ostringstream msg;
        msg << key << " length " << node.size() << " ≠ order " << order;
        throw SpecError(base, msg.str());
    }
    std::vector<Poly> out;
    for (size_t i = 0; i < node.size(); ++i)
        out.push_back(parse_poly_at(node[i], base + "/" + std::to_string(i)));
    return out;
}

}  // namespace

SpecError::SpecError(const std::string& path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(path) {}

RecurrenceSpec load_spec(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError("/", e.what());
    }
    if (!root.is_object()) throw SpecError("/", "expected a JSON object");
    for (const auto& [key, value] : root.items()) {
        (void)value;
        if (key != "order" && key != "coeffs" && key != "initial" && key != "power_sum")
            throw SpecError("/" + key, "unknown key");
    }
    if (!root.contains("order")) throw SpecError("/order", "missing");
    const json& order_node = root["order"];
    if (!order_node.is_number_integer() || order_node.get<long long>() < 1)
        throw SpecError("/order", "order must be a positive integer");
    RecurrenceSpec spec;
    spec.order = order_node.get<long long>();
    if (spec.order > 64) throw SpecError("/order", "order too large (limit 64)");
    if (!root.contains("coeffs")) throw SpecError("/coeffs", "missing");
    spec.coeffs = parse_poly_array(root["coeffs"], "coeffs", spec.order, "/coeffs");
    if (!root.contains("initial")) throw SpecError("/initial", "missing");
    spec.initial = parse_poly_array(root["initial"], "initial", spec.order, "/initial");
    if (root.contains("power_sum")) {
        const json& ps = root["power_sum"];
        if (!ps.is_array()) throw SpecError("/power_sum", "expected an array");
        std::vector<PowerSumTerm> terms;
        for (size_t i = 0; i < ps.size(); ++i) {
            const std::string base = "/power_sum/" + std::to_string(i);
            if (!ps[i].is_object()) throw SpecError(base, "expected an object");
            for (const auto& [key, value] : ps[i].items()) {
                (void)value;
                if (key != "a" && key != "alpha") throw SpecError(base + "/" + key, "unknown key");
            }
            if (!ps[i].contains("a")) throw SpecError(base + "/a", "missing");
            if (!ps[i].contains("alpha")) throw SpecError(base + "/alpha", "missing");
            PowerSumTerm t;
            t.a = parse_poly_at(ps[i]["a"], base + "/a");
            t.alpha = parse_poly_at(ps[i]["alpha"], base + "/alpha");
            if (t.alpha.is_zero()) throw SpecError(base + "/alpha", "alpha must be nonzero");
            terms.push_back(std::move(t));
        }
        spec.power_sum = std::move(terms);
    }
    return spec;
}

RecurrenceSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("/", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec(buf.str());
}

std::string save_spec(const RecurrenceSpec& spec) {
    ordered_json root;
    root["order"] = spec.order;
    root["coeffs"] = ordered_json::array();
    for (const auto& p : spec.coeffs) root["coeffs"].push_back(print_poly(p));
    root["initial"] = ordered_json::array();
    for (const auto& p : spec.initial) root["initial"].push_back(print_poly(p));
    if (spec.power_sum) {
        root["power_sum"] = ordered_json::array();
        for (const auto& t : *spec.power_sum) {
            ordered_json item;
            item["a"] = print_poly(t.a);
            item["alpha"] = print_poly(t.alpha);
            root["power_sum"].push_back(item);
        }
    }
    return root.dump(2);
}

}  // namespace powersum
