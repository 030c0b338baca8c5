#pragma once

#include <cstdint>
#include <vector>

#include "eltip/ising.hpp"

namespace eltip::detail {

struct PairTerm {
    std::uint64_t mask; // bit_i | bit_j
    double value;
};

/// Dense per-pair term list in canonical map order, generated on demand for
/// enumeration inner loops.
inline std::vector<PairTerm> pair_terms(const IsingProblem& problem) {
    std::vector<PairTerm> terms;
    terms.reserve(problem.couplings().size());
    for (const auto& [pair, value] : problem.couplings()) {
        terms.push_back({(std::uint64_t{1} << pair.first) | (std::uint64_t{1} << pair.second), value});
    }
    return terms;
}

/// Energy of basis index z. Accumulates coupling terms in canonical pair
/// order and then field terms in index order, with each term entering as
/// +value or -value. Multiplying a double by +-1.0 is exact, so this is
/// bit-identical to energy() on the matching SpinConfig.
inline double config_energy(const std::vector<PairTerm>& pairs,
                            const std::vector<double>& fields, std::uint64_t z) {
    double e = 0.0;
    for (const PairTerm& term : pairs) {
        // odd parity of the two addressed bits => s_i * s_j = -1
        const bool odd = __builtin_parityll(z & term.mask);
        e += odd ? -term.value : term.value;
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const bool down = (z >> i) & 1u;
        e += down ? -fields[i] : fields[i];
    }
    return e;
}

} // namespace eltip::detail
