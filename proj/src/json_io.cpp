#include "rspin/json_io.hpp"

#include <stdexcept>

namespace rspin {

nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json out;
    const auto& reg = *p.registry();
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (size_t i = 0; i < reg.size(); ++i) vars.push_back(reg.var(i).name);
    out["variables"] = std::move(vars);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& it : p.ordered_terms()) {
        nlohmann::ordered_json term;
        term["exponents"] = it->first;
        term["coefficient"] = it->second.to_string();
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Poly poly_from_json(const nlohmann::json& j) {
    std::vector<Var> vars;
    for (const auto& name_json : j.at("variables")) {
        std::string name = name_json.get<std::string>();
        if (name == "x") {
            vars.push_back({name, VarRole::FormalX, -1});
        } else if (name.size() >= 2) {
            int index = std::stoi(name.substr(1));
            switch (name[0]) {
                case 't': vars.push_back({name, VarRole::FlatT, index}); break;
                case 'y': vars.push_back({name, VarRole::VersalY, index}); break;
                case 'b': vars.push_back({name, VarRole::FormalB, index}); break;
                default: throw std::invalid_argument("poly_from_json: unknown variable " + name);
            }
        } else {
            throw std::invalid_argument("poly_from_json: unknown variable " + name);
        }
    }
    RegistryPtr reg = std::make_shared<VarRegistry>(std::move(vars));
    Poly p(reg);
    for (const auto& term : j.at("terms")) {
        Poly::Exponents e = term.at("exponents").get<Poly::Exponents>();
        Rational c = Rational::parse(term.at("coefficient").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

nlohmann::ordered_json invariants_to_json(int r) {
    nlohmann::ordered_json out;
    out["r"] = r;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& [key, value] : enumerate_nonzero(r)) {
        nlohmann::ordered_json item;
        item["twists"] = key.twists.twists();
        item["k"] = key.k;
        item["value"] = value.to_string();
        items.push_back(std::move(item));
    }
    out["items"] = std::move(items);
    return out;
}

nlohmann::ordered_json report_to_json(const PrimitivityReport& report) {
    nlohmann::ordered_json out;
    out["r"] = report.r;
    out["degree_cap"] = report.cap;
    out["primitive"] = report.primitive;
    out["flat"] = report.flat;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& v : report.per_basis) {
        nlohmann::ordered_json row;
        row["d"] = v.d;
        row["phi0"] = v.phi0.to_text();
        row["phi1"] = v.phi1.to_text();
        row["primitive"] = v.primitive;
        row["flat"] = v.flat;
        rows.push_back(std::move(row));
    }
    out["per_basis"] = std::move(rows);
    if (report.first_failure) {
        nlohmann::ordered_json f;
        f["d"] = report.first_failure->d;
        f["hbar_exponent"] = report.first_failure->j;
        f["monomial"] = report.first_failure->monomial;
        f["coefficient"] = report.first_failure->coefficient;
        out["first_failure"] = std::move(f);
    }
    return out;
}

}  // namespace rspin
