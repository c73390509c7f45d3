#include "brauercat/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brauercat/errors.hpp"

namespace brauercat {

using nlohmann::json;

namespace {

json poly_json(const DeltaPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

int get_int(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SchemaError(std::string("missing or non-integer '") + key + "'", where);
    return j[key].get<int>();
}

std::vector<std::pair<int, int>> get_pairs(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError("'pairs' must be an array", where);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& p = j[i];
        const std::string at = where + "/" + std::to_string(i);
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
            throw SchemaError("pair must be [a, b]", at);
        out.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return out;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("invalid JSON", "/");
    return j;
}

}  // namespace

std::string to_json(const BrauerMorphism& f) {
    json j;
    j["source"] = f.source();
    j["target"] = f.target();
    json terms = json::array();
    for (const auto& [d, c] : f.terms()) {
        json t;
        t["coeff"] = poly_json(c);
        t["pairs"] = pairs_json(d.pairs);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

std::string to_json(const EnhancedMorphism& f) {
    json j;
    j["m"] = f.m();
    j["source"] = f.source();
    j["target"] = f.target();
    json terms = json::array();
    for (const auto& [d, c] : f.terms()) {
        json t;
        t["coeff"] = to_string(c);
        if (d.has_delta()) t["delta_legs"] = d.delta_legs;
        t["pairs"] = pairs_json(d.pairs);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump(2) + "\n";
}

std::string to_json(const Tensor& t) {
    json j;
    j["m"] = t.m();
    j["source"] = t.source();
    j["target"] = t.target();
    json entries = json::array();
    const int pts = t.points();
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        if (t[flat] == 0) continue;
        std::string key(static_cast<std::size_t>(pts), '0');
        std::size_t rem = flat;
        for (int k = pts; k-- > 0;) {
            key[static_cast<std::size_t>(k)] =
                static_cast<char>('1' + static_cast<int>(rem % static_cast<std::size_t>(t.m())));
            rem /= static_cast<std::size_t>(t.m());
        }
        entries.push_back(json::array({key, to_string(t[flat])}));
    }
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

BrauerMorphism brauer_from_json(const std::string& text) {
    const json j = parse_text(text);
    const int s = get_int(j, "source", "/source");
    const int t = get_int(j, "target", "/target");
    BrauerMorphism f(s, t);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw SchemaError("missing 'terms' array", "/terms");
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        const json& term = j["terms"][i];
        const std::string at = "/terms/" + std::to_string(i);
        if (!term.contains("coeff") || !term["coeff"].is_array())
            throw SchemaError("missing 'coeff' list", at + "/coeff");
        std::vector<Rational> coeffs;
        for (const auto& c : term["coeff"]) {
            if (!c.is_string()) throw SchemaError("coefficient must be a string", at + "/coeff");
            coeffs.push_back(rational_from_string(c.get<std::string>()));
        }
        if (!term.contains("pairs")) throw SchemaError("missing 'pairs'", at + "/pairs");
        auto pairs = get_pairs(term["pairs"], at + "/pairs");
        Diagram d;
        try {
            d = make_diagram(s, t, std::move(pairs));
        } catch (const Error& e) {
            throw SchemaError(e.what(), at + "/pairs");
        }
        f.add_term(d, DeltaPolynomial(std::move(coeffs)));
    }
    return f;
}

EnhancedMorphism enhanced_from_json(const std::string& text, int expect_m) {
    const json j = parse_text(text);
    const int m = get_int(j, "m", "/m");
    if (expect_m >= 0 && m != expect_m)
        throw SchemaError("file has m=" + std::to_string(m) + " but the context requires m=" +
                              std::to_string(expect_m),
                          "/m");
    const int s = get_int(j, "source", "/source");
    const int t = get_int(j, "target", "/target");
    EnhancedMorphism f(m, s, t);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw SchemaError("missing 'terms' array", "/terms");
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
        const json& term = j["terms"][i];
        const std::string at = "/terms/" + std::to_string(i);
        if (!term.contains("coeff") || !term["coeff"].is_string())
            throw SchemaError("missing 'coeff' string", at + "/coeff");
        const Rational coeff = rational_from_string(term["coeff"].get<std::string>());
        std::vector<int> legs;
        if (term.contains("delta_legs")) {
            if (!term["delta_legs"].is_array())
                throw SchemaError("'delta_legs' must be an array", at + "/delta_legs");
            for (const auto& l : term["delta_legs"]) {
                if (!l.is_number_integer())
                    throw SchemaError("leg must be an integer", at + "/delta_legs");
                legs.push_back(l.get<int>());
            }
        }
        if (!term.contains("pairs")) throw SchemaError("missing 'pairs'", at + "/pairs");
        auto pairs = get_pairs(term["pairs"], at + "/pairs");
        EnhancedDiagram d;
        try {
            d = make_enhanced_diagram(s, t, std::move(legs), std::move(pairs));
        } catch (const Error& e) {
            throw SchemaError(e.what(), at);
        }
        try {
            f.add_term(d, coeff);
        } catch (const Error& e) {
            throw SchemaError(e.what(), at);
        }
    }
    return f;
}

void save_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
}

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace brauercat
