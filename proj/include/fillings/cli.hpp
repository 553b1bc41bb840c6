#ifndef FILLINGS_CLI_HPP
#define FILLINGS_CLI_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fillings/census.hpp"
#include "fillings/dot.hpp"
#include "fillings/jsonio.hpp"
#include "fillings/monodromy.hpp"

namespace fillings {

namespace cli {

inline std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw validation_error("cannot open input file " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline void print_census_text(const CensusReport& report, std::ostream& out) {
    out << "graph: e0=" << report.graph.central_weight << " arms=[";
    for (size_t a = 0; a < report.graph.arms.size(); ++a) {
        out << (a ? " " : "") << "[";
        for (size_t t = 0; t < report.graph.arms[a].size(); ++t)
            out << (t ? "," : "") << report.graph.arms[a][t];
        out << "]";
    }
    out << "]\n";
    out << "dual: +1 with arms [";
    for (size_t a = 0; a < report.dual.arms.size(); ++a) {
        out << (a ? " " : "") << "[";
        for (size_t t = 0; t < report.dual.arms[a].size(); ++t)
            out << (t ? "," : "") << report.dual.arms[a][t];
        out << "]";
    }
    out << "], blow-ups: " << report.dual.config.step_count() << "\n";
    out << "candidates: " << report.candidates.size() << "\n";
    for (size_t i = 0; i < report.candidates.size(); ++i) {
        const auto& c = report.candidates[i];
        out << "  #" << i + 1 << " chi=" << c.euler << " M=" << c.basis_size
            << " |sigma|<=" << c.sigma_abs_bound << " config="
            << (c.config.name.empty() ? "-" : c.config.name) << " uniqueness="
            << (c.uniqueness == Uniqueness::guaranteed ? "guaranteed" : "upper-bound-only");
        if (!c.annotation.empty()) out << " (" << c.annotation << ")";
        out << "\n";
    }
    for (const auto& f : report.fixtures)
        out << "fixture " << f.family << ": expected " << f.expected << ", got " << f.got << " -> "
            << (f.pass ? "pass" : "FAIL") << "\n";
    out << "elapsed: " << report.elapsed_seconds << "s\n";
}

}  // namespace cli

// Exit codes: 0 success, 2 invalid input, 3 equivalence unknown.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"census of symplectic fillings of dually positive Seifert fibered spaces"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string format = "json";
    bool no_symmetry_quotient = false;
    bool fixtures = false;
    long long budget = 100000;

    auto* census_cmd = app.add_subcommand("census", "enumerate filling candidates");
    census_cmd->add_option("input", input_path, "input file (JSON), - for stdin");
    census_cmd->add_flag("--no-symmetry-quotient", no_symmetry_quotient,
                         "do not merge candidates related by arm symmetries");
    census_cmd->add_flag("--fixtures", fixtures, "run the known-family checks");
    census_cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* dual_cmd = app.add_subcommand("dual", "compute the dual graph");
    dual_cmd->add_option("input", input_path, "input file (JSON), - for stdin");
    dual_cmd->add_option("--format", format, "json, text, or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));

    auto* mono_cmd = app.add_subcommand("monodromy", "open-book words of the candidates");
    mono_cmd->add_option("input", input_path, "input file (JSON), - for stdin");
    mono_cmd->add_flag("--no-symmetry-quotient", no_symmetry_quotient,
                       "do not merge candidates related by arm symmetries");
    mono_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string word1, word2;
    int holes = 0;
    auto* verify_cmd = app.add_subcommand("verify", "prove two twist words equivalent");
    verify_cmd->add_option("word1", word1, "first word, e.g. \"D{1}D{2}D{3}D{1,2,3}\"")->required();
    verify_cmd->add_option("word2", word2, "second word")->required();
    verify_cmd->add_option("--holes", holes, "holes on the page (default: largest hole used)");
    verify_cmd->add_option("--budget", budget, "search budget in canonical word states");

    // CLI11 wants argv order reversed
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify_cmd)) {
            if (holes == 0) {
                auto max_hole = [](const std::string& text) {
                    int best = 1;
                    for (size_t i = 0; i < text.size(); ++i)
                        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                            int v = 0;
                            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                                v = v * 10 + (text[i++] - '0');
                            best = std::max(best, v);
                        }
                    return best;
                };
                holes = std::max(max_hole(word1), max_hole(word2));
            }
            auto a = parse_word(word1, holes);
            auto b = parse_word(word2, holes);
            auto result = prove_equivalent(a, b, budget);
            switch (result.status) {
                case ProofStatus::proven:
                    out << "proven (" << result.trace.moves.size() << " moves)\n";
                    return 0;
                case ProofStatus::disproven:
                    out << "disproven (" << result.separating_invariant << " differs)\n";
                    return 0;
                case ProofStatus::unknown:
                    out << "unknown (budget " << budget << " exhausted)\n";
                    return 3;
            }
        }

        InputDoc input = parse_input(cli::slurp(input_path, in));
        StarGraph g = input.resolve_graph();
        bool quotient = !no_symmetry_quotient;
        if (input.symmetry_quotient) quotient = *input.symmetry_quotient && !no_symmetry_quotient;

        if (app.got_subcommand(dual_cmd)) {
            if (!is_dually_positive(g)) throw validation_error("graph is not dually positive");
            auto dual = build_dual(g);
            if (format == "dot") {
                out << dot_dual_graph(dual, g);
            } else if (format == "text") {
                out << "dual: +1 with arms [";
                for (size_t a = 0; a < dual.arms.size(); ++a) {
                    out << (a ? " " : "") << "[";
                    for (size_t t = 0; t < dual.arms[a].size(); ++t)
                        out << (t ? "," : "") << dual.arms[a][t];
                    out << "]";
                }
                out << "], blow-ups: " << dual.config.step_count() << "\n";
            } else {
                json doc;
                doc["input"] = input_to_json(input);
                doc["dual_graph"] = dual_graph_to_json(dual);
                out << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(census_cmd)) {
            if (!is_dually_positive(g)) throw validation_error("graph is not dually positive");
            auto report = build_census(g, quotient, fixtures);
            if (format == "text")
                cli::print_census_text(report, out);
            else
                out << census_report_to_json(input, report).dump(2) << "\n";
            return 0;
        }

        if (app.got_subcommand(mono_cmd)) {
            if (!is_dually_positive(g)) throw validation_error("graph is not dually positive");
            auto report = build_census(g, quotient, false);
            DualShape shape = DualShape::of(report.dual);
            for (const auto& arm : shape.arms)
                if (arm.size() != 1)
                    throw validation_error("monodromy words need a dual graph with length-one arms");
            if (format == "text") {
                for (size_t i = 0; i < report.candidates.size(); ++i)
                    out << "#" << i + 1 << " chi=" << report.candidates[i].euler << " "
                        << format_word(rep_to_word(shape, report.candidates[i].rep)) << "\n";
            } else {
                json doc;
                doc["input"] = input_to_json(input);
                json words = json::array();
                for (const auto& c : report.candidates)
                    words.push_back(json{{"chi", c.euler}, {"word", format_word(rep_to_word(shape, c.rep))}});
                doc["monodromy"] = words;
                out << doc.dump(2) << "\n";
            }
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fillings

#endif
