#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "severi/fixtures.hpp"
#include "severi/format.hpp"
#include "severi/verify.hpp"

using namespace severi;

TEST_CASE("format names") {
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("single counts in all three formats") {
    const ComputeResult plain{4, 5, TangencyVector({5}), BigInt(36975)};
    CHECK(format_compute(plain, OutputFormat::text) == "36975\n");
    CHECK(format_compute(plain, OutputFormat::json) ==
          "{\"d\":5,\"delta\":4,\"pi\":\"[5]\",\"value\":\"36975\"}\n");
    CHECK(format_compute(plain, OutputFormat::csv) == "delta,d,pi,value\n4,5,[5],36975\n");

    // Patterns with commas must be quoted in csv.
    const ComputeResult tangent{3, 4, TangencyVector({2, 1}), BigInt(2364)};
    CHECK(format_compute(tangent, OutputFormat::csv) == "delta,d,pi,value\n3,4,\"[2,1]\",2364\n");
    CHECK(format_compute(tangent, OutputFormat::json) ==
          "{\"d\":4,\"delta\":3,\"pi\":\"[2,1]\",\"value\":\"2364\"}\n");
}

TEST_CASE("json output is canonical") {
    const ComputeResult result{3, 4, TangencyVector({2, 1}), BigInt(2364)};
    const std::string printed = format_compute(result, OutputFormat::json);
    // Parse and re-print: byte-identical (sorted keys, no whitespace).
    const auto parsed = nlohmann::json::parse(printed);
    CHECK(parsed.dump() + "\n" == printed);
    CHECK(parsed["value"].get<std::string>() == "2364"); // counts stay strings
}

TEST_CASE("polynomials in all three formats") {
    SeveriEngine engine;
    const PolynomialFamily family(1, {});
    PolynomialResult result{family, 2, 4, node_polynomial(engine, family, 2, 4)};

    CHECK(format_polynomial(result, OutputFormat::text) == "3 e^2 - 6 e + 3\n");
    const std::string json_text = format_polynomial(result, OutputFormat::json);
    CHECK(json_text ==
          "{\"coefficients\":[\"3\",\"-6\",\"3\"],\"degree\":2,\"delta\":1,\"e_min\":2,"
          "\"samples\":4,\"tail\":\"[]\"}\n");
    CHECK(nlohmann::json::parse(json_text).dump() + "\n" == json_text);
    CHECK(format_polynomial(result, OutputFormat::csv) == "power,coefficient\n2,3\n1,-6\n0,3\n");

    // Fractional coefficients print as num/den.
    const PolynomialFamily quartic(2, {});
    PolynomialResult frac{quartic, 3, 6, node_polynomial(engine, quartic, 3, 6)};
    const auto parsed = nlohmann::json::parse(format_polynomial(frac, OutputFormat::json));
    CHECK(parsed["coefficients"][0].get<std::string>() == "9/2");
    CHECK(parsed["coefficients"][3].get<std::string>() == "81/2");
}

TEST_CASE("tables in all three formats") {
    SeveriEngine engine;
    const TableResult result{1, 4, engine.severi_table(1, 4)};

    const std::string text = format_table(result, OutputFormat::text);
    CHECK(text.find("delta \\ d") != std::string::npos);
    CHECK(text.find("27") != std::string::npos); // N(1,4)

    const std::string json_text = format_table(result, OutputFormat::json);
    CHECK(json_text == "{\"d_max\":4,\"delta_max\":1,\"values\":[[\"1\",\"1\",\"1\",\"1\"],"
                       "[\"0\",\"3\",\"12\",\"27\"]]}\n");
    CHECK(nlohmann::json::parse(json_text).dump() + "\n" == json_text);

    const std::string csv = format_table(result, OutputFormat::csv);
    CHECK(csv.rfind("delta,d,pi,value\n0,1,[1],1\n", 0) == 0);
    CHECK(csv.find("\n1,4,[4],27\n") != std::string::npos);
}

TEST_CASE("expansion traces") {
    SeveriEngine engine;
    const std::string one_level = format_trace(engine, SeveriState{5, 3, TangencyVector(), TangencyVector({5})}, 1);
    CHECK(one_level == "(5,3,[],[5]) = 7915\n"
                       "  1 x (5,3,[1],[4]) = 7915  [fix-point]\n");

    // The full tree under the line-pair count, all leaves at d=1.
    const std::string full = format_trace(engine, SeveriState{2, 1, TangencyVector(), TangencyVector({2})}, 5);
    CHECK(full == "(2,1,[],[2]) = 3\n"
                  "  1 x (2,1,[1],[1]) = 3  [fix-point]\n"
                  "    1 x (2,1,[2],[]) = 2  [fix-point]\n"
                  "      1 x (1,1,[],[1]) = 0  [degenerate]\n"
                  "      2 x (1,0,[1],[]) = 1  [degenerate]\n"
                  "    1 x (1,0,[],[1]) = 1  [degenerate]\n");

    CHECK_THROWS_AS(format_trace(engine, SeveriState{1, 0, TangencyVector(), TangencyVector({1})}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(format_trace(engine, SeveriState{2, 1, TangencyVector(), TangencyVector({2})}, 0),
                    std::invalid_argument);
}

TEST_CASE("verification report rendering and determinism") {
    SeveriEngine engine;
    const VerificationReport report = run_verification(engine, VerifySuite::quick, 1);
    CHECK(report.ok());
    CHECK(report.count(CheckStatus::fail) == 0);
    CHECK(report.count(CheckStatus::pass) == report.entries.size()); // quick has no advisory or info entries

    const std::string text = format_verify(report, OutputFormat::text);
    CHECK(text.find("verification suite: quick") != std::string::npos);
    CHECK(text.find("result: PASS") != std::string::npos);
    CHECK(text.find("N(1,e) = 3(e-1)^2") != std::string::npos);

    const std::string json_text = format_verify(report, OutputFormat::json);
    CHECK(nlohmann::json::parse(json_text).dump() + "\n" == json_text);
    const auto parsed = nlohmann::json::parse(json_text);
    CHECK(parsed["ok"].get<bool>());
    CHECK(parsed["suite"].get<std::string>() == "quick");
    CHECK(parsed["totals"]["fail"].get<int>() == 0);
    CHECK(parsed["entries"].size() == report.entries.size());

    const std::string csv = format_verify(report, OutputFormat::csv);
    CHECK(csv.rfind("id,status,expected,actual,note\n", 0) == 0);
    CHECK(csv.find("\"N(1,e) = 3(e-1)^2, e=2..15\",pass,") != std::string::npos); // comma forces quoting

    // The canonical output must not depend on the worker count.
    SeveriEngine threaded;
    const VerificationReport parallel_report = run_verification(threaded, VerifySuite::quick, 4);
    CHECK(format_verify(parallel_report, OutputFormat::json) == json_text);
}
