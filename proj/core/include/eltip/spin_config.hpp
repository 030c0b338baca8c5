#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eltip {

/// A classical configuration of n Ising spins, each +1 or -1.
///
/// Configurations map to basis indices by the canonical bit order:
/// bit i of the index is 0 when spin i is +1 and 1 when it is -1.
/// Text renderings place spin 0 leftmost ("+-+-" means s0=+1, s1=-1, ...).
class SpinConfig {
public:
    explicit SpinConfig(std::vector<std::int8_t> spins);

    /// Configuration for basis index `index` of an n-spin register.
    static SpinConfig from_index(std::uint64_t index, int n);

    /// Parses a "+-+-" style string, spin 0 leftmost.
    static SpinConfig parse(std::string_view text);

    int size() const noexcept { return static_cast<int>(spins_.size()); }
    std::int8_t operator[](int i) const { return spins_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int8_t>& spins() const noexcept { return spins_; }

    std::uint64_t to_index() const;
    std::string to_string() const;

    friend bool operator==(const SpinConfig&, const SpinConfig&) = default;

private:
    std::vector<std::int8_t> spins_;
};

/// Ordering used to break energy ties: +1 sorts before -1, spin 0 is the
/// most significant position.
bool config_precedes(const SpinConfig& a, const SpinConfig& b);

/// Number of positions where two equal-length configurations differ.
/// Throws DimensionError on length mismatch.
int hamming_distance(const SpinConfig& a, const SpinConfig& b);

} // namespace eltip
