#include "hazardkit/json_io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace hazardkit {

namespace {

const char* gate_kind_name(Gate::Kind k) {
    switch (k) {
        case Gate::Kind::Input: return "lit";
        case Gate::Kind::And: return "and";
        case Gate::Kind::Or: return "or";
        case Gate::Kind::Not: return "not";
    }
    return "?";
}

Gate::Kind gate_kind_from(const std::string& s) {
    if (s == "lit") return Gate::Kind::Input;
    if (s == "and") return Gate::Kind::And;
    if (s == "or") return Gate::Kind::Or;
    if (s == "not") return Gate::Kind::Not;
    throw std::invalid_argument("circuit document: unknown gate kind '" + s + "'");
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& c, nlohmann::json meta) {
    nlohmann::json gates = nlohmann::json::array();
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        nlohmann::json jg{{"id", i}, {"kind", gate_kind_name(g.kind)}};
        if (g.kind == Gate::Kind::Input) {
            jg["var"] = g.lit.var;
            jg["neg"] = g.lit.negated;
        } else {
            jg["children"] = g.children;
        }
        gates.push_back(std::move(jg));
    }
    nlohmann::json doc{{"num_vars", c.num_vars},
                       {"gates", std::move(gates)},
                       {"output", c.output},
                       {"is_formula", c.is_formula}};
    if (!meta.is_null() && !meta.empty()) doc["meta"] = std::move(meta);
    return doc;
}

Circuit circuit_from_json(const nlohmann::json& doc) {
    Circuit c;
    c.num_vars = doc.at("num_vars").get<int>();
    c.output = doc.at("output").get<int>();
    c.is_formula = doc.value("is_formula", false);
    const auto& gates = doc.at("gates");
    c.gates.reserve(gates.size());
    for (const auto& jg : gates) {
        if (jg.at("id").get<std::size_t>() != c.gates.size())
            throw std::invalid_argument("circuit document: gate ids must be 0,1,2,...");
        Gate g;
        g.kind = gate_kind_from(jg.at("kind").get<std::string>());
        if (g.kind == Gate::Kind::Input) {
            g.lit.var = jg.at("var").get<int>();
            g.lit.negated = jg.value("neg", false);
        } else {
            g.children = jg.at("children").get<std::vector<int>>();
        }
        c.gates.push_back(std::move(g));
    }
    c.validate();
    return c;
}

std::string method_name(DetectionMethod m) {
    switch (m) {
        case DetectionMethod::Brute: return "brute";
        case DetectionMethod::Eichelberger: return "eichelberger";
        case DetectionMethod::DnfPair: return "dnf-pair";
        case DetectionMethod::CnfDual: return "cnf-dual";
    }
    return "?";
}

std::string kind_name(HazardKind k) {
    return k == HazardKind::OneHazard ? "1-hazard" : "0-hazard";
}

nlohmann::json report_to_json(const HazardReport& r, double elapsed_ms, nlohmann::json meta) {
    nlohmann::json doc{{"result", r.found ? "hazard" : "hazard-free"},
                       {"kind", nullptr},
                       {"witness", nullptr},
                       {"method", method_name(r.method)},
                       {"elapsed_ms", elapsed_ms},
                       {"meta", meta.is_null() ? nlohmann::json::object() : std::move(meta)}};
    if (r.found) {
        doc["kind"] = kind_name(r.kind);
        doc["witness"] = r.witness.to_string();
        doc["verified"] = r.verified;
    }
    return doc;
}

}  // namespace hazardkit
