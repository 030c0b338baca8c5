#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace eltip;
using namespace testsupport;

TEST_CASE("analyze reads the small-gap instance's low-energy structure") {
    const LandscapeReport report = analyze(fig1b(), 16);
    CHECK(report.ground_energy == doctest::Approx(-3.2575).epsilon(1e-12));
    REQUIRE(report.ground_configs.size() == 1);
    CHECK(report.ground_configs[0].to_string() == "+-+-");

    CHECK(report.levels[0].gap_from_ground == 0.0);
    CHECK(report.levels[0].min_hamming_to_ground == 0);

    // first excited: gap 0.005 at Hamming distance 2 (state -++-)
    CHECK(report.levels[1].gap_from_ground == doctest::Approx(0.005).epsilon(1e-9));
    CHECK(report.levels[1].config.to_string() == "-++-");
    CHECK(report.levels[1].min_hamming_to_ground == 2);

    // the maximally distant state -+-+ sits at gap 0.015
    CHECK(report.levels[2].config.to_string() == "-+-+");
    CHECK(report.levels[2].gap_from_ground == doctest::Approx(0.015).epsilon(1e-9));
    CHECK(report.levels[2].min_hamming_to_ground == 4);

    CHECK(report.levels[3].gap_from_ground == doctest::Approx(0.035).epsilon(1e-9));
    CHECK(report.levels[3].min_hamming_to_ground == 3);
}

TEST_CASE("analyze reports the maximal-distance gap of the hard instance") {
    const LandscapeReport report = analyze(fig1c(), 16);
    CHECK(report.levels[1].gap_from_ground == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(report.levels[1].min_hamming_to_ground == 4);

    // after the k=0 transform the first excited state moves next door
    const LandscapeReport transformed = analyze(apply_transform(fig1c(), 0), 16);
    CHECK(transformed.levels[1].gap_from_ground == doctest::Approx(0.01).epsilon(1e-9));
    CHECK(transformed.levels[1].min_hamming_to_ground == 1);
    CHECK(transformed.ground_energy == doctest::Approx(report.ground_energy).epsilon(1e-12));
}

TEST_CASE("analyze invariants") {
    std::mt19937 rng(67);
    const IsingProblem p = random_problem(rng, 5);
    const LandscapeReport report = analyze(p, 12);
    CHECK(report.ground_energy == full_spectrum(p).ground_energy());
    for (std::size_t lvl = 0; lvl < report.levels.size(); ++lvl) {
        if (report.levels[lvl].gap_from_ground == 0.0) {
            CHECK(report.levels[lvl].min_hamming_to_ground == 0);
        } else {
            CHECK(report.levels[lvl].min_hamming_to_ground >= 1);
            CHECK(report.levels[lvl].min_hamming_to_ground <= 5);
        }
    }
    CHECK_THROWS_AS(analyze(p, 0), ArgumentError);
    CHECK_THROWS_AS(analyze(p, 33), ArgumentError);
}

TEST_CASE("degenerate grounds are all collected") {
    const IsingProblem p(2, {{{0, 1}, -1.0}}, {0.0, 0.0});
    const LandscapeReport report = analyze(p, 4);
    REQUIRE(report.ground_configs.size() == 2);
    CHECK(report.ground_configs[0].to_string() == "++");
    CHECK(report.ground_configs[1].to_string() == "--");
    CHECK(report.levels[2].min_hamming_to_ground == 1); // either excited state
}

TEST_CASE("difficulty score is zero for a clean gap") {
    // energies {-3,-1,1,3}: every gap is at least the 1.5 threshold
    const IsingProblem p(2, {}, {1.0, 2.0});
    CHECK(analyze(p, 4).difficulty_score == 0.0);
}

TEST_CASE("difficulty score needs at least two levels") {
    LandscapeReport short_report = analyze(table4_id(), 1);
    CHECK(short_report.difficulty_score == 0.0);
    CHECK_THROWS_AS(difficulty_score(short_report), ArgumentError);
}

TEST_CASE("difficulty score is scale invariant") {
    const double base = analyze(fig1c(), 16).difficulty_score;
    std::map<SpinPair, double> scaled;
    for (const auto& [pair, v] : fig1c().couplings()) scaled[pair] = 10.0 * v;
    std::vector<double> fields = fig1c().fields();
    for (double& h : fields) h *= 10.0;
    const double big = analyze(IsingProblem(4, scaled, fields), 16).difficulty_score;
    CHECK(big == doctest::Approx(base / 10.0).epsilon(1e-5));
}

TEST_CASE("the transform lowers the hard instance's score") {
    const double original = analyze(fig1c(), 16).difficulty_score;
    const double transformed = analyze(apply_transform(fig1c(), 0), 16).difficulty_score;
    CHECK(transformed < original);
}

TEST_CASE("rank_landscapes orders the 0.005-gap family") {
    const auto ranking = rank_landscapes(fig1b(), 16);
    REQUIRE(ranking.size() == 5);
    std::size_t pos_id = 99, pos_t0 = 99;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (ranking[i].first == "id") pos_id = i;
        if (ranking[i].first == "T0") pos_t0 = i;
    }
    REQUIRE(pos_id != 99);
    REQUIRE(pos_t0 != 99);
    CHECK(pos_t0 < pos_id);
    for (std::size_t i = 1; i < ranking.size(); ++i) {
        CHECK(ranking[i - 1].second.difficulty_score <= ranking[i].second.difficulty_score);
    }
}

TEST_CASE("rank_landscapes breaks ties in enumeration order") {
    const auto ranking = rank_landscapes(IsingProblem(3), 4);
    REQUIRE(ranking.size() == 4);
    CHECK(ranking[0].first == "id");
    CHECK(ranking[1].first == "T0");
    CHECK(ranking[2].first == "T1");
    CHECK(ranking[3].first == "T2");
    for (const auto& [label, report] : ranking) CHECK(report.difficulty_score == 0.0);
}

TEST_CASE("ranking output is a permutation of the landscape labels") {
    std::mt19937 rng(71);
    const IsingProblem p = random_problem(rng, 6);
    const auto ranking = rank_landscapes(p, 10);
    REQUIRE(ranking.size() == 7);
    std::set<std::string> labels;
    for (const auto& [label, report] : ranking) labels.insert(label);
    CHECK(labels == std::set<std::string>{"id", "T0", "T1", "T2", "T3", "T4", "T5"});
}

TEST_CASE("ground energy is invariant across every landscape") {
    std::mt19937 rng(73);
    const IsingProblem p = random_problem(rng, 5);
    const double reference = analyze(p, 2).ground_energy;
    for (int k = 0; k < 5; ++k) {
        CHECK(analyze(apply_transform(p, k), 2).ground_energy ==
              doctest::Approx(reference).epsilon(1e-12));
    }
}
