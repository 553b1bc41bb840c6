#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fillings/cli.hpp"

using namespace fillings;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("input parsing") {
    auto doc = parse_input(R"({"graph":{"e0":-4,"arms":[[-3],[-3],[-3]]}})");
    REQUIRE(doc.graph.has_value());
    CHECK(doc.graph->central_weight == -4);
    CHECK(doc.graph->arms.size() == 3);

    auto seifert = parse_input(R"({"seifert":{"e0":-5,"r":["-3/2","-3/2","-3/2","-3/2"]}})");
    REQUIRE(seifert.seifert.has_value());
    CHECK(seifert.resolve_graph().arms == std::vector<std::vector<int>>{{-2}, {-2}, {-2}, {-2}});

    auto with_options =
        parse_input(R"({"graph":{"e0":-4,"arms":[[-2]]},"options":{"symmetry_quotient":false,"budget":7}})");
    CHECK(with_options.symmetry_quotient == false);
    CHECK(with_options.budget == 7);

    CHECK_THROWS_AS(parse_input(R"({"seifert":{"e0":-4,"r":["-1/2"]}})"), validation_error);
    CHECK_THROWS_AS(parse_input(R"({"graph":{},"seifert":{}})"), validation_error);
    CHECK_THROWS_AS(parse_input(R"({})"), validation_error);
    CHECK_THROWS_AS(parse_input("not json"), validation_error);
    CHECK_THROWS_AS(parse_input(R"({"seifert":{"e0":-4,"r":[-1.5]}})"), validation_error);
}

TEST_CASE("census command") {
    std::string input = R"({"graph":{"e0":-4,"arms":[[-3],[-3],[-3]]}})";
    auto res = run({"census", "-", "--fixtures"}, input);
    REQUIRE(res.code == 0);
    auto doc = json::parse(res.out);
    CHECK(doc["candidates"].size() == 3);
    CHECK(doc["dual_graph"]["central_weight"] == 1);
    CHECK(doc["candidates"][0]["chi"] == 5);
    CHECK(doc["candidates"][2]["chi"] == 1);
    CHECK(doc["candidates"][2]["M"] == 6);
    REQUIRE(doc["fixtures"].size() >= 1);
    for (const auto& f : doc["fixtures"]) CHECK(f["pass"] == true);

    // reports round-trip byte for byte
    CHECK(json::parse(res.out).dump(2) + "\n" == res.out);
    // identical runs, identical bytes
    auto again = run({"census", "-", "--fixtures"}, input);
    CHECK(again.out == res.out);
}

TEST_CASE("census text format and quotient flag") {
    std::string input = R"({"graph":{"e0":-5,"arms":[[-2],[-2],[-2],[-2]]}})";
    auto text = run({"census", "-", "--format", "text"}, input);
    CHECK(text.code == 0);
    CHECK(text.out.find("candidates: 3") != std::string::npos);

    auto raw = run({"census", "-", "--format", "text", "--no-symmetry-quotient"}, input);
    CHECK(raw.out.find("candidates: 6") != std::string::npos);
}

TEST_CASE("dual command") {
    std::string input = R"({"seifert":{"e0":-4,"r":["-2","-2","-2"]}})";
    auto res = run({"dual", "-", "--format", "text"}, input);
    CHECK(res.code == 0);
    CHECK(res.out.find("[[-2] [-2] [-2]]") != std::string::npos);

    auto dot = run({"dual", "-", "--format", "dot"}, input);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph Gamma {") != std::string::npos);
    CHECK(dot.out.find("graph GammaPrime {") != std::string::npos);
    CHECK(dot.out.find("graph Configuration {") != std::string::npos);
    CHECK(dot.out.find("fillcolor=lightblue") != std::string::npos);
    CHECK(dot.out.find("fillcolor=gray") != std::string::npos);

    auto bad = run({"dual", "-"}, R"({"graph":{"e0":-3,"arms":[[-2],[-2],[-2]]}})");
    CHECK(bad.code == 2);
}

TEST_CASE("monodromy command") {
    std::string input = R"({"graph":{"e0":-5,"arms":[[-2],[-2],[-2],[-2]]}})";
    auto res = run({"monodromy", "-", "--format", "text"}, input);
    REQUIRE(res.code == 0);
    CHECK(res.out.find("D{1,2,3,4} D{1}^2 D{2}^2 D{3}^2 D{4}^2") != std::string::npos);

    // dual graphs with longer arms have no word catalog
    auto unsupported = run({"monodromy", "-"}, R"({"graph":{"e0":-4,"arms":[[-3],[-3],[-3]]}})");
    CHECK(unsupported.code == 2);
}

TEST_CASE("verify command") {
    auto proven = run({"verify", "D{1}D{2}D{3}D{1,2,3}", "D{1,2}D{2,3}D{1,3}"});
    CHECK(proven.code == 0);
    CHECK(proven.out.find("proven") == 0);

    auto disproven = run({"verify", "D{1}", "D{2}"});
    CHECK(disproven.code == 0);
    CHECK(disproven.out.find("disproven") == 0);

    // same invariants but not reachable within a tiny budget
    auto unknown = run({"verify", "--budget", "3", "--holes", "6",
                        "D{1}D{2}D{3}D{1,2,3}D{4,5}D{4,6}D{5,6}",
                        "D{1,2}D{2,3}D{1,3}D{4}D{5}D{6}D{4,5,6}"});
    CHECK(unknown.code == 3);
    CHECK(unknown.out.find("unknown") == 0);
}

TEST_CASE("invalid input exits with 2") {
    CHECK(run({"census", "-"}, "garbage").code == 2);
    CHECK(run({"census", "-"}, R"({"seifert":{"e0":-4,"r":["-1/2"]}})").code == 2);
    CHECK(run({"census", "-"}, R"({"graph":{"e0":-4,"arms":[[-2],[-2],[-2],[-2]]}})").code == 2);
}
