#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "eltip/spin_config.hpp"

namespace eltip {

using SpinPair = std::pair<int, int>;

/// An Ising problem: E(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i.
///
/// Couplings are stored sparsely under ordered pairs (i < j); a pair that is
/// absent is an exact zero, and explicit zeros are dropped on construction so
/// the two representations are indistinguishable. Instances are immutable
/// after construction and safe to share across threads.
class IsingProblem {
public:
    /// The n-spin problem with every coefficient zero.
    explicit IsingProblem(int n);

    IsingProblem(int n, const std::map<SpinPair, double>& couplings,
                 std::vector<double> fields);

    int spin_count() const noexcept { return n_; }

    /// Coupling between spins i and j in either index order; 0 when absent.
    double coupling(int i, int j) const;
    double field(int i) const;

    const std::map<SpinPair, double>& couplings() const noexcept { return couplings_; }
    const std::vector<double>& fields() const noexcept { return fields_; }

    bool operator==(const IsingProblem& other) const;

private:
    int n_;
    std::map<SpinPair, double> couplings_;
    std::vector<double> fields_;
};

/// All 2^n energy levels of a problem, sorted ascending by energy with ties
/// broken by config_precedes. Configurations are stored as basis indices.
class Spectrum {
public:
    struct Level {
        double energy;
        std::uint64_t config_index;
    };

    Spectrum(int n, std::vector<Level> levels);

    int spin_count() const noexcept { return n_; }
    std::size_t size() const noexcept { return levels_.size(); }

    double energy(std::size_t level) const { return levels_[level].energy; }
    SpinConfig config(std::size_t level) const;
    double ground_energy() const { return levels_.front().energy; }

    const std::vector<Level>& levels() const noexcept { return levels_; }

    /// Sorted list of all energies (ascending).
    std::vector<double> energies() const;

private:
    int n_;
    std::vector<Level> levels_;
};

struct SpectrumOptions {
    /// Enumeration refuses problems with more spins than this.
    int max_spins = 24;
};

/// E(s) as written, evaluated coupling terms first (ascending pair order)
/// then field terms (ascending index). Throws DimensionError when the
/// configuration length does not match the problem.
double energy(const IsingProblem& problem, const SpinConfig& config);

/// Enumerates all 2^n configurations. Throws ResourceError above the cap.
/// The result is independent of the worker count used internally, and each
/// stored energy is bit-identical to re-evaluating energy() on its config.
Spectrum full_spectrum(const IsingProblem& problem, const SpectrumOptions& options = {});

/// Negates every field; couplings untouched. Spectrum-preserving involution.
IsingProblem parity_transform(const IsingProblem& problem);

/// Gauge flip of one spin: negates h_k and every J_jk. Spectrum-preserving
/// involution (relabels configurations by flipping spin k).
IsingProblem gauge_flip(const IsingProblem& problem, int k);

/// An (n+1)-spin problem with no field terms, encoding an n-spin problem by
/// routing its fields into couplings with the added ancilla spin.
struct PromotedProblem {
    IsingProblem inner;
    int ancilla_index;
};

/// Promotion: J~_in = h_i and J~_ij = J_ij; the promoted problem has no
/// fields and its spectrum is the doubled original (every level appears for
/// a configuration and its global flip).
PromotedProblem promote_with_ancilla(const IsingProblem& problem);

/// Inverse of promotion, generalized: treat spin k of the field-free
/// promoted problem as the ancilla (swapping it with the actual ancilla
/// first) and pin it to +1. Couplings of the pinned spin become fields.
/// fix_ancilla(promote_with_ancilla(P), n) == P exactly.
IsingProblem fix_ancilla(const PromotedProblem& promoted, int k);

} // namespace eltip
