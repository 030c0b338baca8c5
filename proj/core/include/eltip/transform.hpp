#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eltip/ising.hpp"

namespace eltip {

/// The landscape transformation generator at spin k: for every i != k the
/// coupling J_ik and the field h_i trade places, while h_k and all couplings
/// not touching k stay put. Coefficients are moved, never recomputed, so the
/// operation is exact. The full 2^n spectrum is preserved as a multiset.
IsingProblem apply_transform(const IsingProblem& problem, int k);

/// Relabels spins i and j in both couplings and fields.
IsingProblem swap_spins(const IsingProblem& problem, int i, int j);

/// Relabels every spin i to permutation[i].
IsingProblem relabel_spins(const IsingProblem& problem, const std::vector<int>& permutation);

/// A word in the transformation generators, applied left to right.
struct TransformWord {
    std::vector<int> letters;
};

/// The configuration permutation induced by one generator: configurations
/// with s_k = +1 are fixed; otherwise every spin except k is negated.
///
/// Derivation: the generator swaps spin k with a +1-pinned ancilla of the
/// field-free promotion. A source configuration with s_k = -1 lands on an
/// ancilla value of -1 after the swap; the promoted problem's global-flip
/// degeneracy restores the ancilla to +1 at the cost of negating all other
/// spins. Energy is transported exactly:
///   energy(apply_transform(P, k), map(s)) == energy(P, s).
class StatePermutation {
public:
    StatePermutation(int k, int n);

    int generator() const noexcept { return k_; }
    int spin_count() const noexcept { return n_; }

    SpinConfig apply(const SpinConfig& config) const;
    std::uint64_t apply_index(std::uint64_t index) const;

private:
    int k_;
    int n_;
};

StatePermutation state_permutation(int k, int n);

/// Reduced form of a transformation word: at most one generator followed by
/// a relabeling of the spins. Applying `core` (when present) and then
/// `permutation` reproduces the word's action coefficient-for-coefficient.
struct NormalForm {
    std::optional<int> core;
    std::vector<int> permutation; // permutation[i] = new label of spin i

    bool is_identity() const;
    IsingProblem apply(const IsingProblem& problem) const;
};

/// Reduces a word using the group relations T_k T_k = id and
/// T_i T_j T_i = S_ij. Internally each generator acts as the transposition
/// (k, n) on the promoted problem's n+1 spin labels, so the word collapses
/// to a single permutation of S_{n+1}, which is then split into an optional
/// final generator plus an n-spin relabeling.
NormalForm reduce_word(const TransformWord& word, int n);

/// The original problem plus the n single-generator transforms, labeled
/// "id", "T0", ..., "T{n-1}". All n+1 problems share one spectrum multiset.
std::vector<std::pair<std::string, IsingProblem>> enumerate_landscapes(const IsingProblem& problem);

/// Max absolute difference between the two sorted spectra. Zero (up to
/// rounding) whenever b was produced from a by transforms, swaps, parity or
/// gauge flips. Throws DimensionError when spin counts differ.
double verify_spectrum_invariance(const IsingProblem& a, const IsingProblem& b,
                                  const SpectrumOptions& options = {});

} // namespace eltip
