#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eltip/ising.hpp"

namespace eltip {

/// One low-lying level with its distance-to-ground data.
struct LevelReport {
    double energy;
    SpinConfig config;
    double gap_from_ground;
    int min_hamming_to_ground;
};

/// Low-energy structure of one problem: the ground set and the first L
/// levels annotated with gap and minimal Hamming distance to any ground
/// configuration, plus a scalar difficulty score.
struct LandscapeReport {
    int spin_count = 0;
    double ground_energy = 0.0;
    std::vector<SpinConfig> ground_configs;
    std::vector<LevelReport> levels;
    double difficulty_score = 0.0;
};

/// Version tag of the difficulty heuristic, recorded in report output.
inline constexpr std::string_view difficulty_score_version = "hamming-over-gap-v1";

struct AnalyzeOptions {
    SpectrumOptions spectrum{};
};

/// min(16, 2^n), the default number of levels to report.
int default_level_count(int n);

/// Report over the `level_count` lowest levels of the full spectrum.
LandscapeReport analyze(const IsingProblem& problem, int level_count,
                        const AnalyzeOptions& options = {});

/// Difficulty heuristic: sum over excited levels whose gap is below
/// theta = 0.5 * median(gap over the reported levels) of
/// min_hamming / (gap + 1e-9). Near-ground states far in Hamming distance
/// score high; a clean first gap scores zero. This is a ranking heuristic,
/// not a predictor of absolute annealing times. Requires >= 2 levels.
double difficulty_score(const LandscapeReport& report);

/// Analyzes the n+1 single-generator landscapes and sorts them by
/// ascending difficulty score; ties keep enumeration order (original
/// first, then generators by index).
std::vector<std::pair<std::string, LandscapeReport>> rank_landscapes(
    const IsingProblem& problem, int level_count, const AnalyzeOptions& options = {});

} // namespace eltip
