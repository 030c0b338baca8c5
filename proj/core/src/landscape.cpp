#include "eltip/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eltip/errors.hpp"
#include "eltip/transform.hpp"
#include "detail/parallel.hpp"

namespace eltip {

int default_level_count(int n) {
    if (n >= 4) return 16;
    return 1 << n;
}

LandscapeReport analyze(const IsingProblem& problem, int level_count,
                        const AnalyzeOptions& options) {
    const int n = problem.spin_count();
    const Spectrum spectrum = full_spectrum(problem, options.spectrum);
    if (level_count < 1 || static_cast<std::size_t>(level_count) > spectrum.size()) {
        throw ArgumentError("analyze: level count " + std::to_string(level_count) +
                            " outside [1, 2^" + std::to_string(n) + "]");
    }

    LandscapeReport report;
    report.spin_count = n;
    report.ground_energy = spectrum.ground_energy();
    for (std::size_t lvl = 0; lvl < spectrum.size(); ++lvl) {
        if (spectrum.energy(lvl) != report.ground_energy) break;
        report.ground_configs.push_back(spectrum.config(lvl));
    }

    report.levels.reserve(static_cast<std::size_t>(level_count));
    for (std::size_t lvl = 0; lvl < static_cast<std::size_t>(level_count); ++lvl) {
        const SpinConfig config = spectrum.config(lvl);
        int min_d = n;
        for (const SpinConfig& g : report.ground_configs) {
            min_d = std::min(min_d, hamming_distance(config, g));
        }
        report.levels.push_back({spectrum.energy(lvl), config,
                                 spectrum.energy(lvl) - report.ground_energy, min_d});
    }
    report.difficulty_score = (level_count >= 2) ? difficulty_score(report) : 0.0;
    return report;
}

double difficulty_score(const LandscapeReport& report) {
    const std::size_t count = report.levels.size();
    if (count < 2) throw ArgumentError("difficulty_score: need at least 2 levels");

    std::vector<double> gaps;
    gaps.reserve(count);
    for (const LevelReport& level : report.levels) gaps.push_back(level.gap_from_ground);
    std::vector<double> sorted(gaps);
    std::sort(sorted.begin(), sorted.end());
    const double median = (count % 2 == 1)
                              ? sorted[count / 2]
                              : 0.5 * (sorted[count / 2 - 1] + sorted[count / 2]);
    const double theta = 0.5 * median;
    constexpr double epsilon = 1e-9;

    double score = 0.0;
    for (std::size_t lvl = 1; lvl < count; ++lvl) {
        if (gaps[lvl] < theta) {
            score += report.levels[lvl].min_hamming_to_ground / (gaps[lvl] + epsilon);
        }
    }
    return score;
}

std::vector<std::pair<std::string, LandscapeReport>> rank_landscapes(
    const IsingProblem& problem, int level_count, const AnalyzeOptions& options) {
    const auto landscapes = enumerate_landscapes(problem);
    std::vector<std::pair<std::string, LandscapeReport>> ranked(landscapes.size());
    detail::parallel_chunks(landscapes.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            ranked[idx] = {landscapes[idx].first,
                           analyze(landscapes[idx].second, level_count, options)};
        }
    });
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.second.difficulty_score < b.second.difficulty_score;
    });
    return ranked;
}

} // namespace eltip
