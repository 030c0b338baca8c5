#include "eltip/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eltip/errors.hpp"
#include "detail/energy_kernel.hpp"
#include "detail/parallel.hpp"

namespace eltip {

namespace {

void check_spin_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) {
        throw IndexError(std::string(what) + " index " + std::to_string(i) +
                         " out of range for " + std::to_string(n) + " spins");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// SpinConfig

SpinConfig::SpinConfig(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
    for (std::int8_t s : spins_) {
        if (s != 1 && s != -1) throw ArgumentError("spin values must be +1 or -1");
    }
}

SpinConfig SpinConfig::from_index(std::uint64_t index, int n) {
    if (n < 1 || n > 63) throw ArgumentError("spin count must be in [1, 63] for indexed configs");
    std::vector<std::int8_t> spins(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        spins[static_cast<std::size_t>(i)] = ((index >> i) & 1u) ? -1 : 1;
    }
    return SpinConfig(std::move(spins));
}

SpinConfig SpinConfig::parse(std::string_view text) {
    std::vector<std::int8_t> spins;
    spins.reserve(text.size());
    for (char c : text) {
        if (c == '+') spins.push_back(1);
        else if (c == '-') spins.push_back(-1);
        else throw ArgumentError(std::string("invalid spin character '") + c + "'");
    }
    if (spins.empty()) throw ArgumentError("empty spin configuration");
    return SpinConfig(std::move(spins));
}

std::uint64_t SpinConfig::to_index() const {
    if (spins_.size() > 63) throw ArgumentError("config too long for a 64-bit index");
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < spins_.size(); ++i) {
        if (spins_[i] == -1) z |= std::uint64_t{1} << i;
    }
    return z;
}

std::string SpinConfig::to_string() const {
    std::string out;
    out.reserve(spins_.size());
    for (std::int8_t s : spins_) out.push_back(s == 1 ? '+' : '-');
    return out;
}

bool config_precedes(const SpinConfig& a, const SpinConfig& b) {
    const int n = std::min(a.size(), b.size());
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] == 1; // +1 sorts first
    }
    return a.size() < b.size();
}

int hamming_distance(const SpinConfig& a, const SpinConfig& b) {
    if (a.size() != b.size()) {
        throw DimensionError("hamming_distance: configs have lengths " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    int d = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

// ---------------------------------------------------------------------------
// IsingProblem

IsingProblem::IsingProblem(int n) : n_(n), fields_(static_cast<std::size_t>(std::max(n, 0)), 0.0) {
    if (n < 1) throw ArgumentError("spin count must be >= 1");
}

IsingProblem::IsingProblem(int n, const std::map<SpinPair, double>& couplings,
                           std::vector<double> fields)
    : n_(n), fields_(std::move(fields)) {
    if (n < 1) throw ArgumentError("spin count must be >= 1");
    if (fields_.size() != static_cast<std::size_t>(n)) {
        throw DimensionError("field list has length " + std::to_string(fields_.size()) +
                             ", expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (!std::isfinite(fields_[i])) {
            throw ValidationError("field " + std::to_string(i) + " is not finite");
        }
    }
    for (const auto& [pair, value] : couplings) {
        const auto [i, j] = pair;
        if (i < 0 || j >= n || i >= j) {
            throw IndexError("coupling pair (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") must satisfy 0 <= i < j <= " + std::to_string(n - 1));
        }
        if (!std::isfinite(value)) {
            throw ValidationError("coupling (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") is not finite");
        }
        if (value != 0.0) couplings_.emplace(pair, value);
    }
}

double IsingProblem::coupling(int i, int j) const {
    check_spin_index(i, n_, "coupling");
    check_spin_index(j, n_, "coupling");
    if (i == j) throw IndexError("coupling requires two distinct spins");
    if (i > j) std::swap(i, j);
    auto it = couplings_.find({i, j});
    return it == couplings_.end() ? 0.0 : it->second;
}

double IsingProblem::field(int i) const {
    check_spin_index(i, n_, "field");
    return fields_[static_cast<std::size_t>(i)];
}

bool IsingProblem::operator==(const IsingProblem& other) const {
    return n_ == other.n_ && couplings_ == other.couplings_ && fields_ == other.fields_;
}

// ---------------------------------------------------------------------------
// Energy and spectrum

double energy(const IsingProblem& problem, const SpinConfig& config) {
    if (config.size() != problem.spin_count()) {
        throw DimensionError("energy: config has " + std::to_string(config.size()) +
                             " spins, problem has " + std::to_string(problem.spin_count()));
    }
    double e = 0.0;
    for (const auto& [pair, value] : problem.couplings()) {
        e += value * static_cast<double>(config[pair.first]) * static_cast<double>(config[pair.second]);
    }
    const auto& fields = problem.fields();
    for (int i = 0; i < problem.spin_count(); ++i) {
        e += fields[static_cast<std::size_t>(i)] * static_cast<double>(config[i]);
    }
    return e;
}

Spectrum::Spectrum(int n, std::vector<Level> levels) : n_(n), levels_(std::move(levels)) {}

SpinConfig Spectrum::config(std::size_t level) const {
    return SpinConfig::from_index(levels_[level].config_index, n_);
}

std::vector<double> Spectrum::energies() const {
    std::vector<double> out;
    out.reserve(levels_.size());
    for (const Level& level : levels_) out.push_back(level.energy);
    return out;
}

Spectrum full_spectrum(const IsingProblem& problem, const SpectrumOptions& options) {
    const int n = problem.spin_count();
    if (n > options.max_spins) {
        throw ResourceError("full_spectrum: " + std::to_string(n) + " spins exceeds the cap of " +
                            std::to_string(options.max_spins) +
                            " (2^n enumeration would be too large)");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    const auto pairs = detail::pair_terms(problem);
    const auto& fields = problem.fields();

    std::vector<Spectrum::Level> levels(count);
    detail::parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
        for (std::size_t z = begin; z < end; ++z) {
            levels[z] = {detail::config_energy(pairs, fields, z), z};
        }
    });

    // ties: +1 before -1 reading from spin 0, i.e. bit-reversed index order
    std::sort(levels.begin(), levels.end(),
              [n](const Spectrum::Level& a, const Spectrum::Level& b) {
                  if (a.energy != b.energy) return a.energy < b.energy;
                  for (int i = 0; i < n; ++i) {
                      const unsigned ba = (a.config_index >> i) & 1u;
                      const unsigned bb = (b.config_index >> i) & 1u;
                      if (ba != bb) return ba < bb;
                  }
                  return false;
              });
    return Spectrum(n, std::move(levels));
}

// ---------------------------------------------------------------------------
// Coefficient-level transforms that stay inside ising-core

IsingProblem parity_transform(const IsingProblem& problem) {
    std::vector<double> fields = problem.fields();
    for (double& h : fields) h = -h;
    return IsingProblem(problem.spin_count(), problem.couplings(), std::move(fields));
}

IsingProblem gauge_flip(const IsingProblem& problem, int k) {
    check_spin_index(k, problem.spin_count(), "gauge_flip");
    std::map<SpinPair, double> couplings = problem.couplings();
    for (auto& [pair, value] : couplings) {
        if (pair.first == k || pair.second == k) value = -value;
    }
    std::vector<double> fields = problem.fields();
    fields[static_cast<std::size_t>(k)] = -fields[static_cast<std::size_t>(k)];
    return IsingProblem(problem.spin_count(), couplings, std::move(fields));
}

PromotedProblem promote_with_ancilla(const IsingProblem& problem) {
    const int n = problem.spin_count();
    std::map<SpinPair, double> couplings = problem.couplings();
    for (int i = 0; i < n; ++i) {
        const double h = problem.fields()[static_cast<std::size_t>(i)];
        if (h != 0.0) couplings.emplace(SpinPair{i, n}, h);
    }
    return PromotedProblem{IsingProblem(n + 1, couplings, std::vector<double>(n + 1, 0.0)), n};
}

IsingProblem fix_ancilla(const PromotedProblem& promoted, int k) {
    const IsingProblem& inner = promoted.inner;
    const int ancilla = promoted.ancilla_index;
    if (ancilla != inner.spin_count() - 1) {
        throw ArgumentError("fix_ancilla: ancilla must be the last spin");
    }
    for (double h : inner.fields()) {
        if (h != 0.0) throw ArgumentError("fix_ancilla: promoted problem must be field-free");
    }
    if (k < 0 || k > ancilla) {
        throw IndexError("fix_ancilla: spin " + std::to_string(k) + " out of range [0, " +
                         std::to_string(ancilla) + "]");
    }

    const int n = ancilla; // result spin count
    std::map<SpinPair, double> couplings;
    std::vector<double> fields(static_cast<std::size_t>(n), 0.0);

    if (k == ancilla) {
        for (const auto& [pair, value] : inner.couplings()) {
            if (pair.second == ancilla) fields[static_cast<std::size_t>(pair.first)] = value;
            else couplings.emplace(pair, value);
        }
        return IsingProblem(n, couplings, std::move(fields));
    }

    // Swap spin k with the ancilla, then pin the (relabeled) ancilla to +1:
    // couplings J_ik of the pinned spin become fields, couplings J_i,ancilla
    // move onto spin k, and J_k,ancilla becomes the field of spin k.
    for (const auto& [pair, value] : inner.couplings()) {
        const auto [i, j] = pair;
        if (j == ancilla) {
            if (i == k) {
                fields[static_cast<std::size_t>(k)] = value; // J_k,ancilla -> h_k
            } else {
                couplings.emplace(SpinPair{std::min(i, k), std::max(i, k)}, value);
            }
        } else if (i == k || j == k) {
            const int other = (i == k) ? j : i;
            fields[static_cast<std::size_t>(other)] = value; // J_ik -> h_i
        } else {
            couplings.emplace(pair, value);
        }
    }
    return IsingProblem(n, couplings, std::move(fields));
}

} // namespace eltip
