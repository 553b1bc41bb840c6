#ifndef FILLINGS_JSONIO_HPP
#define FILLINGS_JSONIO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fillings/census.hpp"
#include "fillings/plumbing.hpp"

namespace fillings {

using json = nlohmann::json;

struct InputDoc {
    std::optional<StarGraph> graph;
    std::optional<SeifertData> seifert;
    std::optional<bool> symmetry_quotient;
    std::optional<long long> budget;

    StarGraph resolve_graph() const {
        if (graph) return *graph;
        return graph_from_seifert(*seifert);
    }
};

inline InputDoc parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("syntax: ") + e.what());
    }
    if (!doc.is_object()) throw validation_error("input must be a JSON object");
    InputDoc input;
    bool has_graph = doc.contains("graph"), has_seifert = doc.contains("seifert");
    if (has_graph == has_seifert)
        throw validation_error("exactly one of \"graph\" or \"seifert\" must be present");

    if (has_graph) {
        const auto& g = doc["graph"];
        if (!g.is_object() || !g.contains("e0") || !g.contains("arms"))
            throw validation_error("graph: need integer \"e0\" and array \"arms\"");
        if (!g["e0"].is_number_integer()) throw validation_error("graph.e0: expected an integer");
        StarGraph graph;
        graph.central_weight = g["e0"].get<int>();
        if (!g["arms"].is_array()) throw validation_error("graph.arms: expected an array of arrays");
        for (size_t a = 0; a < g["arms"].size(); ++a) {
            const auto& arm = g["arms"][a];
            if (!arm.is_array() || arm.empty())
                throw validation_error("graph.arms[" + std::to_string(a) + "]: expected a nonempty array");
            std::vector<int> weights;
            for (const auto& w : arm) {
                if (!w.is_number_integer())
                    throw validation_error("graph.arms[" + std::to_string(a) + "]: expected integers");
                weights.push_back(w.get<int>());
            }
            graph.arms.push_back(std::move(weights));
        }
        input.graph = std::move(graph);
    } else {
        const auto& s = doc["seifert"];
        if (!s.is_object() || !s.contains("e0") || !s.contains("r"))
            throw validation_error("seifert: need integer \"e0\" and array \"r\"");
        if (!s["e0"].is_number_integer()) throw validation_error("seifert.e0: expected an integer");
        SeifertData data;
        data.e0 = s["e0"].get<int>();
        if (!s["r"].is_array()) throw validation_error("seifert.r: expected an array of strings");
        for (size_t i = 0; i < s["r"].size(); ++i) {
            const auto& r = s["r"][i];
            if (!r.is_string())
                throw validation_error("seifert.r[" + std::to_string(i) + "]: rationals are \"p/q\" strings");
            Rational value;
            if (!parse_rational(r.get<std::string>(), value))
                throw validation_error("seifert.r[" + std::to_string(i) + "]: cannot parse rational");
            if (value >= -1)
                throw validation_error("seifert.r[" + std::to_string(i) + "]: must be < -1");
            data.coefficients.push_back(value);
        }
        input.seifert = std::move(data);
    }

    if (doc.contains("options")) {
        const auto& o = doc["options"];
        if (!o.is_object()) throw validation_error("options: expected an object");
        if (o.contains("symmetry_quotient")) {
            if (!o["symmetry_quotient"].is_boolean())
                throw validation_error("options.symmetry_quotient: expected a boolean");
            input.symmetry_quotient = o["symmetry_quotient"].get<bool>();
        }
        if (o.contains("budget")) {
            if (!o["budget"].is_number_integer())
                throw validation_error("options.budget: expected an integer");
            input.budget = o["budget"].get<long long>();
        }
    }
    return input;
}

inline json star_graph_to_json(const StarGraph& g) {
    return json{{"e0", g.central_weight}, {"arms", g.arms}};
}

inline json seifert_to_json(const SeifertData& data) {
    json r = json::array();
    for (const auto& c : data.coefficients) r.push_back(rational_to_string(c));
    return json{{"e0", data.e0}, {"r", r}};
}

inline json input_to_json(const InputDoc& input) {
    json doc;
    if (input.graph) doc["graph"] = star_graph_to_json(*input.graph);
    if (input.seifert) doc["seifert"] = seifert_to_json(*input.seifert);
    return doc;
}

inline json dual_graph_to_json(const DualGraph& dual) {
    return json{{"central_weight", dual.central_weight},
                {"arms", dual.arms},
                {"blowup_steps", dual.config.step_count()}};
}

inline json candidate_to_json(const FillingCandidate& cand) {
    json rep;
    rep["basis_size"] = cand.rep.basis_size;
    rep["classes"] = cand.rep.classes;
    json config;
    config["multipoints"] = cand.config.multipoints;
    config["name"] = cand.config.name;
    return json{{"chi", cand.euler},
                {"sigma_bound", cand.sigma_abs_bound},
                {"M", cand.basis_size},
                {"config", config},
                {"uniqueness",
                 cand.uniqueness == Uniqueness::guaranteed ? "guaranteed" : "upper_bound_only"},
                {"annotation", cand.annotation},
                {"rep", rep}};
}

inline json census_report_to_json(const InputDoc& input, const CensusReport& report) {
    json doc;
    doc["input"] = input_to_json(input);
    doc["dual_graph"] = dual_graph_to_json(report.dual);
    json candidates = json::array();
    for (const auto& c : report.candidates) candidates.push_back(candidate_to_json(c));
    doc["candidates"] = candidates;
    json fixtures = json::array();
    for (const auto& f : report.fixtures)
        fixtures.push_back(
            json{{"family", f.family}, {"expected", f.expected}, {"got", f.got}, {"pass", f.pass}});
    doc["fixtures"] = fixtures;
    return doc;
}

}  // namespace fillings

#endif
