#include "eltip/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eltip/errors.hpp"

namespace eltip {

namespace {

void check_spin_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) {
        throw IndexError(std::string(what) + ": spin " + std::to_string(i) +
                         " out of range for " + std::to_string(n) + " spins");
    }
}

SpinPair ordered(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

} // namespace

IsingProblem apply_transform(const IsingProblem& problem, int k) {
    const int n = problem.spin_count();
    check_spin_index(k, n, "apply_transform");

    std::map<SpinPair, double> couplings;
    std::vector<double> fields(static_cast<std::size_t>(n), 0.0);
    fields[static_cast<std::size_t>(k)] = problem.fields()[static_cast<std::size_t>(k)];

    for (const auto& [pair, value] : problem.couplings()) {
        const auto [i, j] = pair;
        if (i == k || j == k) {
            const int other = (i == k) ? j : i;
            fields[static_cast<std::size_t>(other)] = value; // J_ik -> h_i
        } else {
            couplings.emplace(pair, value);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        const double h = problem.fields()[static_cast<std::size_t>(i)];
        if (h != 0.0) couplings.emplace(ordered(i, k), h); // h_i -> J_ik
    }
    return IsingProblem(n, couplings, std::move(fields));
}

IsingProblem swap_spins(const IsingProblem& problem, int i, int j) {
    const int n = problem.spin_count();
    check_spin_index(i, n, "swap_spins");
    check_spin_index(j, n, "swap_spins");
    if (i == j) throw ArgumentError("swap_spins: the two spins must differ");

    std::vector<int> permutation(static_cast<std::size_t>(n));
    std::iota(permutation.begin(), permutation.end(), 0);
    std::swap(permutation[static_cast<std::size_t>(i)], permutation[static_cast<std::size_t>(j)]);
    return relabel_spins(problem, permutation);
}

IsingProblem relabel_spins(const IsingProblem& problem, const std::vector<int>& permutation) {
    const int n = problem.spin_count();
    if (permutation.size() != static_cast<std::size_t>(n)) {
        throw DimensionError("relabel_spins: permutation length " +
                             std::to_string(permutation.size()) + " != spin count " +
                             std::to_string(n));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : permutation) {
        check_spin_index(p, n, "relabel_spins");
        if (seen[static_cast<std::size_t>(p)]) {
            throw ArgumentError("relabel_spins: label " + std::to_string(p) + " repeats");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }

    std::map<SpinPair, double> couplings;
    for (const auto& [pair, value] : problem.couplings()) {
        couplings.emplace(ordered(permutation[static_cast<std::size_t>(pair.first)],
                                  permutation[static_cast<std::size_t>(pair.second)]),
                          value);
    }
    std::vector<double> fields(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        fields[static_cast<std::size_t>(permutation[static_cast<std::size_t>(i)])] =
            problem.fields()[static_cast<std::size_t>(i)];
    }
    return IsingProblem(n, couplings, std::move(fields));
}

// ---------------------------------------------------------------------------
// StatePermutation

StatePermutation::StatePermutation(int k, int n) : k_(k), n_(n) {
    if (n < 1) throw ArgumentError("state_permutation: spin count must be >= 1");
    check_spin_index(k, n, "state_permutation");
}

StatePermutation state_permutation(int k, int n) { return StatePermutation(k, n); }

SpinConfig StatePermutation::apply(const SpinConfig& config) const {
    if (config.size() != n_) {
        throw DimensionError("state_permutation: config has " + std::to_string(config.size()) +
                             " spins, expected " + std::to_string(n_));
    }
    if (config[k_] == 1) return config;
    std::vector<std::int8_t> spins = config.spins();
    for (int i = 0; i < n_; ++i) {
        if (i != k_) spins[static_cast<std::size_t>(i)] = -spins[static_cast<std::size_t>(i)];
    }
    return SpinConfig(std::move(spins));
}

std::uint64_t StatePermutation::apply_index(std::uint64_t index) const {
    if (((index >> k_) & 1u) == 0) return index; // s_k = +1
    const std::uint64_t all = (n_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    return index ^ (all & ~(std::uint64_t{1} << k_));
}

// ---------------------------------------------------------------------------
// Word reduction
//
// On the field-free promotion the generator at spin k is exactly the label
// transposition (k, n), so a word multiplies out to one element of S_{n+1}.
// If that permutation fixes the ancilla label n the action is a pure spin
// relabeling; otherwise peeling one transposition (k*, n) with
// k* = pi^{-1}(n) leaves a relabeling that fixes n.

bool NormalForm::is_identity() const {
    if (core.has_value()) return false;
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (permutation[i] != static_cast<int>(i)) return false;
    }
    return true;
}

IsingProblem NormalForm::apply(const IsingProblem& problem) const {
    IsingProblem out = core.has_value() ? apply_transform(problem, *core) : problem;
    return relabel_spins(out, permutation);
}

NormalForm reduce_word(const TransformWord& word, int n) {
    if (n < 1) throw ArgumentError("reduce_word: spin count must be >= 1");
    std::vector<int> pi(static_cast<std::size_t>(n) + 1);
    std::iota(pi.begin(), pi.end(), 0);
    for (int letter : word.letters) {
        check_spin_index(letter, n, "reduce_word");
        // left-compose with the transposition (letter, n)
        for (int& image : pi) {
            if (image == letter) image = n;
            else if (image == n) image = letter;
        }
    }

    NormalForm form;
    if (pi[static_cast<std::size_t>(n)] == n) {
        form.permutation.assign(pi.begin(), pi.end() - 1);
        return form;
    }
    int k = -1;
    for (int i = 0; i <= n; ++i) {
        if (pi[static_cast<std::size_t>(i)] == n) {
            k = i;
            break;
        }
    }
    form.core = k;
    // rho = pi o (k, n) fixes n; its restriction is the relabeling
    std::vector<int> rho(pi);
    std::swap(rho[static_cast<std::size_t>(k)], rho[static_cast<std::size_t>(n)]);
    form.permutation.assign(rho.begin(), rho.end() - 1);
    return form;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, IsingProblem>> enumerate_landscapes(const IsingProblem& problem) {
    std::vector<std::pair<std::string, IsingProblem>> out;
    out.reserve(static_cast<std::size_t>(problem.spin_count()) + 1);
    out.emplace_back("id", problem);
    for (int k = 0; k < problem.spin_count(); ++k) {
        out.emplace_back("T" + std::to_string(k), apply_transform(problem, k));
    }
    return out;
}

double verify_spectrum_invariance(const IsingProblem& a, const IsingProblem& b,
                                  const SpectrumOptions& options) {
    if (a.spin_count() != b.spin_count()) {
        throw DimensionError("verify_spectrum_invariance: spin counts differ (" +
                             std::to_string(a.spin_count()) + " vs " +
                             std::to_string(b.spin_count()) + ")");
    }
    const std::vector<double> ea = full_spectrum(a, options).energies();
    const std::vector<double> eb = full_spectrum(b, options).energies();
    double worst = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

} // namespace eltip
