#ifndef FILLINGS_DOT_HPP
#define FILLINGS_DOT_HPP

#include <sstream>
#include <string>

#include "fillings/dualgraph.hpp"
#include "fillings/plumbing.hpp"

namespace fillings {

inline std::string dot_star_graph(const std::string& name, const StarGraph& g) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  v0 [label=\"w=" << g.central_weight << "\"];\n";
    int id = 1;
    for (const auto& arm : g.arms) {
        int prev = 0;
        for (int w : arm) {
            out << "  v" << id << " [label=\"w=" << w << "\"];\n";
            out << "  v" << prev << " -- v" << id << ";\n";
            prev = id;
            ++id;
        }
    }
    out << "}\n";
    return out.str();
}

// Gamma, Gamma', and the full blown-up configuration, with the partition
// marked by fill colors (gamma lightblue, gamma' lightsalmon, cuts gray).
inline std::string dot_dual_graph(const DualGraph& dual, const StarGraph& source) {
    std::ostringstream out;
    out << dot_star_graph("Gamma", source);

    out << "graph GammaPrime {\n";
    out << "  v0 [label=\"w=" << dual.central_weight << "\"];\n";
    int id = 1;
    for (const auto& arm : dual.arms) {
        int prev = 0;
        for (int w : arm) {
            out << "  v" << id << " [label=\"w=" << w << "\"];\n";
            out << "  v" << prev << " -- v" << id << ";\n";
            prev = id;
            ++id;
        }
    }
    out << "}\n";

    const auto& config = dual.config;
    std::vector<std::string> color(config.curves.size(), "white");
    for (int cid : dual.gamma_ids()) color[static_cast<size_t>(cid)] = "lightblue";
    for (int cid : dual.gamma_prime_ids()) color[static_cast<size_t>(cid)] = "lightsalmon";
    for (int cid : dual.cut_ids) color[static_cast<size_t>(cid)] = "gray";
    out << "graph Configuration {\n";
    for (const auto& curve : config.curves)
        out << "  c" << curve.id << " [label=\"w=" << curve.self_int << "\", style=filled, fillcolor="
            << color[static_cast<size_t>(curve.id)] << "];\n";
    for (const auto& [pair, mult] : config.incidences)
        for (int t = 0; t < mult; ++t) out << "  c" << pair.first << " -- c" << pair.second << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace fillings

#endif
