#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace eltip;
using namespace testsupport;

namespace {

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_CASE("bundled fixtures parse to the expected problems") {
    CHECK(load_fixture("fig1a.json") == fig1a());
    CHECK(load_fixture("fig2a.json") == fig2a());
    CHECK(load_fixture("fig1b.json") == fig1b());
    CHECK(load_fixture("fig2b.json") == fig2b());
    CHECK(load_fixture("fig1c.json") == fig1c());
    CHECK(load_fixture("fig2c.json") == fig2c());
    CHECK(load_fixture("table4-id.json") == table4_id());
    CHECK(load_fixture("table4-t0.json") == table4_t0());
    CHECK(load_fixture("table4-t1.json") == table4_t1());
    CHECK(load_fixture("table4-t2.json") == table4_t2());
}

TEST_CASE("minimal instance documents parse") {
    const IsingProblem p =
        parse_instance(R"({"format":"eltip-instance/v1","n":1,"couplings":[],"fields":[[0,1.0]]})");
    CHECK(p.spin_count() == 1);
    CHECK(p.field(0) == 1.0);

    // couplings/fields keys may be omitted entirely
    const IsingProblem q = parse_instance(R"({"format":"eltip-instance/v1","n":2})");
    CHECK(q == IsingProblem(2));
}

TEST_CASE("instance validation names the offending index") {
    const auto expect_validation = [](const std::string& text, const std::string& needle) {
        try {
            parse_instance(text);
            FAIL("expected ValidationError for " << text);
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_validation(R"({"format":"eltip-instance/v1","n":3,"couplings":[[2,1,1.0]]})", "(2, 1)");
    expect_validation(R"({"format":"eltip-instance/v1","n":3,"couplings":[[0,3,1.0]]})", "(0, 3)");
    expect_validation(
        R"({"format":"eltip-instance/v1","n":3,"couplings":[[0,1,1.0],[0,1,2.0]]})", "(0, 1)");
    expect_validation(R"({"format":"eltip-instance/v1","n":3,"fields":[[3,1.0]]})", "3");
    expect_validation(R"({"format":"eltip-instance/v1","n":3,"fields":[[1,1.0],[1,2.0]]})", "1");
    expect_validation(R"({"format":"eltip-instance/v1","n":0})", ">= 1");
    expect_validation(R"({"format":"eltip-instance/v2","n":1})", "unsupported");
    expect_validation(R"({"n":1})", "format");
    expect_validation(R"({"format":"eltip-instance/v1","n":1,"fields":[[0,1e999]]})", "finite");
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_instance("{\"format\": \"eltip-instance/v1\",\n  \"n\": }");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("serialization round trips exactly") {
    CHECK(parse_instance(serialize_instance(table4_id())) == table4_id());

    const IsingProblem empty(1);
    CHECK(parse_instance(serialize_instance(empty)) == empty);

    std::mt19937 rng(79);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const IsingProblem p = random_problem(rng, n, 10.0, 0.6);
        CHECK(parse_instance(serialize_instance(p)) == p);
    }
}

TEST_CASE("unknown metadata keys survive a round trip") {
    const std::string text = R"({
        "format": "eltip-instance/v1", "n": 2,
        "couplings": [[0,1,0.5]], "fields": [[0,-1.0]],
        "metadata": {"name": "x", "custom": [1, 2, 3], "nested": {"a": true}}
    })";
    const InstanceDocument doc = parse_instance_document(text);
    const InstanceDocument again = parse_instance_document(serialize_instance_document(doc));
    CHECK(again.metadata_json == doc.metadata_json);
    CHECK(again.metadata_json.find("custom") != std::string::npos);
    CHECK(doc.to_problem() == again.to_problem());
}

TEST_CASE("sweep CSV layout for one spin") {
    SweepResult result;
    result.spin_count = 1;
    result.times = {1.0, 2.0};
    result.probabilities = {{0.25, 0.75}, {0.5, 0.5}};
    result.ground_probability = {0.75, 0.5};
    const std::string csv = write_sweep_csv(result);
    const auto rows = split_csv(csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"T", "+", "-", "ground"});
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][2] == "0.75");
}

TEST_CASE("sweep CSV has a column per basis state and parses back") {
    const SweepResult result = sweep(fig1a(), {2.0, 5.0});
    const std::string csv = write_sweep_csv(result);
    const auto rows = split_csv(csv);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].size() == 18); // T + 16 states + ground
    CHECK(rows[0][1] == "++++");
    for (std::size_t r = 1; r < rows.size(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 1; c < 17; ++c) {
            const double v = std::stod(rows[r][c]);
            CHECK(std::abs(v - result.probabilities[r - 1][c - 1]) < 1e-9);
            sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("report text prints the first excited line and a JSON block") {
    const LandscapeReport report = analyze(fig1b(), 16);
    const std::string text = write_report(report);
    CHECK(text.find("0.005") != std::string::npos);
    CHECK(text.find("+-+-") != std::string::npos);
    CHECK(text.find(std::string(difficulty_score_version)) != std::string::npos);

    const LandscapeReport parsed = parse_report_json(extract_json_block(text));
    CHECK(parsed.spin_count == report.spin_count);
    CHECK(parsed.ground_energy == report.ground_energy);
    CHECK(parsed.difficulty_score == report.difficulty_score);
    REQUIRE(parsed.levels.size() == report.levels.size());
    for (std::size_t i = 0; i < parsed.levels.size(); ++i) {
        CHECK(parsed.levels[i].energy == report.levels[i].energy);
        CHECK(parsed.levels[i].config == report.levels[i].config);
        CHECK(parsed.levels[i].gap_from_ground == report.levels[i].gap_from_ground);
        CHECK(parsed.levels[i].min_hamming_to_ground == report.levels[i].min_hamming_to_ground);
    }
}

TEST_CASE("a one-spin ranking covers both landscapes") {
    const IsingProblem p(1, {}, {0.5});
    const auto ranking = rank_landscapes(p, 2);
    REQUIRE(ranking.size() == 2);
    const std::string text = write_report(ranking);
    const auto parsed = parse_ranking_json(extract_json_block(text));
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].first == ranking[0].first);
    CHECK(parsed[1].first == ranking[1].first);
    CHECK(parsed[0].second.ground_energy == ranking[0].second.ground_energy);
}

TEST_CASE("gnuplot script references every column") {
    const std::string script = write_gnuplot_script("out.csv", 2);
    CHECK(script.find("logscale x") != std::string::npos);
    CHECK(script.find("using 1:2") != std::string::npos);
    CHECK(script.find("using 1:5") != std::string::npos);
    CHECK(script.find("'ground'") != std::string::npos);
}

TEST_CASE("format_double renders shortest round-trip decimals") {
    for (double v : {0.1, 1.0 / 3.0, -2.5, 0.005, 1e-9, 12345.6789, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(3.0) == "3");
    CHECK(format_double(0.123456789123, 9) == "0.123456789");
}
