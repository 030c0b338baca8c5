#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eltip/eltip.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(ELTIP_FIXTURE_DIR) + "/" + name;
}

inline eltip::IsingProblem load_fixture(const std::string& name) {
    return eltip::parse_instance(read_file(fixture_path(name)));
}

// The instance families used throughout, constructed from the same decimal
// literals the fixture files carry.

inline eltip::IsingProblem fig1a() {
    return eltip::IsingProblem(
        4,
        {{{0, 1}, 0.7}, {{0, 2}, 1.4}, {{0, 3}, 1.9}, {{1, 2}, 0.9}, {{1, 3}, 0.3}, {{2, 3}, 2.1}},
        {1.1, 0.3, -1.5, -0.9});
}

inline eltip::IsingProblem fig2a() {
    return eltip::IsingProblem(
        4,
        {{{0, 1}, 0.3}, {{0, 2}, -1.5}, {{0, 3}, -0.9}, {{1, 2}, 0.9}, {{1, 3}, 0.3}, {{2, 3}, 2.1}},
        {1.1, 0.7, 1.4, 1.9});
}

inline eltip::IsingProblem fig1b() {
    return eltip::IsingProblem(4,
                               {{{0, 1}, 0.75},
                                {{0, 2}, 1.375},
                                {{0, 3}, 1.875},
                                {{1, 2}, 0.125},
                                {{1, 3}, 0.375},
                                {{2, 3}, 2.25}},
                               {0.7375, 0.49, -0.675, -0.42});
}

inline eltip::IsingProblem fig2b() {
    return eltip::IsingProblem(4,
                               {{{0, 1}, 0.49},
                                {{0, 2}, -0.675},
                                {{0, 3}, -0.42},
                                {{1, 2}, 0.125},
                                {{1, 3}, 0.375},
                                {{2, 3}, 2.25}},
                               {0.7375, 0.75, 1.375, 1.875});
}

inline eltip::IsingProblem fig1c() {
    return eltip::IsingProblem(4,
                               {{{0, 1}, 0.75},
                                {{0, 2}, 1.375},
                                {{0, 3}, 1.875},
                                {{1, 2}, 0.125},
                                {{1, 3}, 0.375},
                                {{2, 3}, 2.25}},
                               {0.73, 0.49, 0.345, 0.59});
}

inline eltip::IsingProblem fig2c() {
    return eltip::IsingProblem(4,
                               {{{0, 1}, 0.49},
                                {{0, 2}, 0.345},
                                {{0, 3}, 0.59},
                                {{1, 2}, 0.125},
                                {{1, 3}, 0.375},
                                {{2, 3}, 2.25}},
                               {0.73, 0.75, 1.375, 1.875});
}

inline eltip::IsingProblem table4_id() {
    return eltip::IsingProblem(3, {{{0, 1}, 3.0}, {{0, 2}, 5.0}, {{1, 2}, 10.0}},
                               {-7.0, -16.0, 13.0});
}

inline eltip::IsingProblem table4_t0() {
    return eltip::IsingProblem(3, {{{0, 1}, -16.0}, {{0, 2}, 13.0}, {{1, 2}, 10.0}},
                               {-7.0, 3.0, 5.0});
}

inline eltip::IsingProblem table4_t1() {
    return eltip::IsingProblem(3, {{{0, 1}, -7.0}, {{0, 2}, 5.0}, {{1, 2}, 13.0}},
                               {3.0, -16.0, 10.0});
}

inline eltip::IsingProblem table4_t2() {
    return eltip::IsingProblem(3, {{{0, 1}, 3.0}, {{0, 2}, -7.0}, {{1, 2}, -16.0}},
                               {5.0, 10.0, 13.0});
}

/// Random dense-ish problem with coefficients in [-scale, scale].
inline eltip::IsingProblem random_problem(std::mt19937& rng, int n, double scale = 2.0,
                                          double density = 0.8) {
    std::uniform_real_distribution<double> coef(-scale, scale);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    std::map<eltip::SpinPair, double> couplings;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (keep(rng) < density) couplings[{i, j}] = coef(rng);
        }
    }
    std::vector<double> fields(static_cast<std::size_t>(n));
    for (double& h : fields) h = coef(rng);
    return eltip::IsingProblem(n, couplings, std::move(fields));
}

inline eltip::SpinConfig random_config(std::mt19937& rng, int n) {
    std::vector<std::int8_t> spins(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& s : spins) s = bit(rng) ? 1 : -1;
    return eltip::SpinConfig(std::move(spins));
}

/// Independent spectrum oracle: enumerate configs explicitly, evaluate with
/// the public energy() and sort the plain energy list.
inline std::vector<double> brute_force_energies(const eltip::IsingProblem& problem) {
    const int n = problem.spin_count();
    std::vector<double> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
        out.push_back(eltip::energy(problem, eltip::SpinConfig::from_index(z, n)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace testsupport
