#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalcove/cli.hpp"

#include <json.hpp>

using namespace qalcove;

namespace {

CaseSpec worked_case() {
    CaseSpec spec;
    spec.type = "A2";
    spec.lambda = "-1,2";
    spec.w = "s1";
    return spec;
}

int count_lines(const std::string &s) {
    return (int)std::count(s.begin(), s.end(), '\n');
}

} // namespace

TEST_CASE("case spec round trips through its string form") {
    CaseSpec spec = worked_case();
    spec.format = "json";
    spec.truncate_par = 3;
    spec.sweep = "-2..2";
    spec.cap = 12;
    auto text = spec.str();
    CHECK(CaseSpec::parse(text).str() == text);
    CHECK(CaseSpec::parse(text) == spec);
    CHECK_THROWS_AS(CaseSpec::parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(CaseSpec::parse("frobnicate=1"), std::invalid_argument);
}

TEST_CASE("table commands on the worked case") {
    CaseSpec spec = worked_case();

    auto t1 = cmd_table("admissible", spec);
    CHECK(count_lines(t1) == 14); // header, rule, 12 rows
    CHECK(t1.find("| {1,3} | s1 | a2^ | 0 | 1 |") != std::string::npos);

    auto t2 = cmd_table("forgetful", spec);
    CHECK(count_lines(t2) == 14);
    CHECK(t2.find("| {4} | ((s1; ; 0, 1), e) |") != std::string::npos);

    auto t3 = cmd_table("image", spec);
    CHECK(count_lines(t3) == 14);
    CHECK(t3.find("| (s2 s1; ; 0, 1) | o | s2, s2 s1 |") != std::string::npos);

    auto t4 = cmd_table("stats", spec);
    CHECK(count_lines(t4) == 14);
    CHECK(t4.find("| {1,3} | a2^ | -1 |") != std::string::npos);

    CHECK_THROWS_AS(cmd_table("bogus", spec), std::invalid_argument);
}

TEST_CASE("single-row tables for the zero weight") {
    CaseSpec spec;
    spec.type = "A2";
    spec.lambda = "0,0";
    spec.w = "s1";
    auto t = cmd_table("stats", spec);
    CHECK(count_lines(t) == 3);
    CHECK(t.find("| {} | 0 | 0 |") != std::string::npos);
}

TEST_CASE("json table format emits one object per row") {
    CaseSpec spec = worked_case();
    spec.format = "json";
    auto lines = cmd_table("admissible", spec);
    CHECK(count_lines(lines) == 12);
    std::stringstream ss(lines);
    std::string line;
    REQUIRE(std::getline(ss, line));
    auto j = nlohmann::json::parse(line);
    CHECK(j["A"] == std::vector<int>{});
    CHECK(j["end"] == "s1");
}

TEST_CASE("enumerate commands") {
    CaseSpec spec = worked_case();

    CHECK(count_lines(cmd_enumerate("iqls", spec)) == 12);
    CHECK(count_lines(cmd_enumerate("ils", spec)) == 9);

    CaseSpec big = spec;
    big.lambda = "-1,3";
    CHECK(count_lines(cmd_enumerate("iqls", big)) == 36);
    CHECK(count_lines(cmd_enumerate("ils", big)) == 16);

    auto chain = cmd_enumerate("chain", spec);
    CHECK(count_lines(chain) == 4);
    std::stringstream ss(chain);
    std::string line;
    std::vector<std::pair<std::vector<int>, int>> entries;
    while (std::getline(ss, line)) {
        auto j = nlohmann::json::parse(line);
        entries.push_back({j["root"].get<std::vector<int>>(), j["level"].get<int>()});
    }
    std::vector<std::pair<std::vector<int>, int>> expect = {
        {{0, 1}, 0}, {{1, 1}, 0}, {{0, 1}, 1}, {{-1, 0}, 1}};
    CHECK(entries == expect);

    CaseSpec zero = spec;
    zero.lambda = "0,0";
    CHECK(cmd_enumerate("inversions", zero).empty());
    CHECK(count_lines(cmd_enumerate("inversions", spec)) == 4);

    auto qbg = cmd_enumerate("qbg", spec);
    CHECK(nlohmann::json::parse(qbg)["vertices"].size() == 6);
    CaseSpec dot = spec;
    dot.format = "dot";
    CHECK(cmd_enumerate("qbg", dot).rfind("digraph", 0) == 0);

    CHECK_THROWS_AS(cmd_enumerate("bogus", spec), std::invalid_argument);
}

TEST_CASE("series enumeration honors the truncation") {
    CaseSpec spec = worked_case();
    spec.truncate_par = 1;
    auto j = nlohmann::json::parse(cmd_enumerate("series", spec));
    CHECK(j.size() == 24);
}

TEST_CASE("verify single case") {
    CaseSpec spec = worked_case();
    auto outcome = cmd_verify(spec);
    CHECK(outcome.exit_code == 0);
    auto j = nlohmann::json::parse(outcome.report);
    CHECK(j["ok"] == true);
    CHECK(j["case"] == "A2/-1,2");
    REQUIRE(j["identity"].size() == 1);
    CHECK(j["identity"][0]["lhs_terms"] == 12);
    CHECK(j["identity"][0]["rhs_terms"] == 12);
    CHECK(j["identity"][0]["equal"] == true);
}

TEST_CASE("verify sweep over one type") {
    CaseSpec spec;
    spec.type = "A2";
    spec.sweep = "-1..1";
    auto outcome = cmd_verify(spec);
    CHECK(outcome.exit_code == 0);
    auto j = nlohmann::json::parse(outcome.report);
    CHECK(j["ok"] == true);
    CHECK(j["cases"].size() == 9);
    CHECK(j["failed"] == 0);
}

TEST_CASE("empty sweep passes vacuously") {
    CaseSpec spec;
    spec.type = "A2";
    spec.sweep = "1..0"; // empty coefficient range
    auto outcome = cmd_verify(spec);
    CHECK(outcome.exit_code == 0);
    auto j = nlohmann::json::parse(outcome.report);
    CHECK(j["ok"] == true);
    CHECK(j["cases"].size() == 0);
}

TEST_CASE("user-supplied order files are validated") {
    CaseSpec spec = worked_case();
    spec.order = "/tmp/qalcove_order_test.json";
    {
        std::ofstream out(spec.order);
        out << "[[1,0],[1,1],[0,1]]";
    }
    CHECK(count_lines(cmd_table("admissible", spec)) == 14);
    {
        std::ofstream out(spec.order);
        out << "[[0,1],[1,1],[1,0]]"; // valid reflection order, wrong blocks
    }
    CHECK_THROWS_AS(cmd_table("admissible", spec), std::invalid_argument);
    spec.order = "/tmp/definitely_missing_order.json";
    CHECK_THROWS_AS(cmd_table("admissible", spec), std::invalid_argument);
}

TEST_CASE("outputs are byte-stable") {
    CaseSpec spec = worked_case();
    for (const char *kind : {"admissible", "forgetful", "image", "stats"})
        CHECK(cmd_table(kind, spec) == cmd_table(kind, spec));
    for (const char *kind : {"iqls", "ils", "qbg", "chain", "inversions"})
        CHECK(cmd_enumerate(kind, spec) == cmd_enumerate(kind, spec));
    CHECK(cmd_verify(spec).report == cmd_verify(spec).report);
}
