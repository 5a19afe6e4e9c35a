#pragma once

// Generators for the point-process families under study: primes in an
// interval, diluted integer lattices, seeded lattice gases, and the
// period-doubling substitution chain.

#include <cstdint>
#include <string>
#include <vector>

#include "pointspec/numtheory.hpp"

namespace pointspec {

enum class PointKind {
    Primes,
    IntegerLattice,
    LatticeGas,
    PeriodDoublingA,
    PeriodDoublingB,
    Custom,
};

std::string to_string(PointKind kind);
PointKind point_kind_from_string(const std::string& name);

/// Occupied sites on a segment of the integer lattice. Positions in
/// `occupied` are relative to `origin` (absolute site = origin + position),
/// strictly increasing, all in [0, length).
struct PointConfiguration {
    i64 origin = 0;
    u64 length = 0;
    u64 spacing = 1;
    PointKind kind = PointKind::Custom;
    std::vector<u64> occupied;

    u64 count() const { return occupied.size(); }
    double fraction() const {
        return length ? static_cast<double>(occupied.size()) / length : 0.0;
    }
    i64 absolute(u64 index) const {
        return origin + static_cast<i64>(occupied[index]);
    }
    /// Checks the structural invariants; throws std::invalid_argument.
    void validate() const;
};

/// Primes in (M, M+L] placed on the lattice [M+1, M+L], origin = M+1.
PointConfiguration primes_config(u64 M, u64 L);

/// Every (1/f)-th site occupied: {0, 1/f, 2/f, ...}. 1/f must be an integer.
PointConfiguration integer_lattice_config(u64 length, double f);

/// Each site occupied independently with probability f. The generator is
/// counter-based and keyed by (seed, site), so the result is identical
/// regardless of evaluation order or thread count.
PointConfiguration lattice_gas_config(u64 length, double f, u64 seed);

/// Substitution rule over a two-letter alphabet; defaults to the
/// period-doubling rule a -> ab, b -> aa.
struct SubstitutionRule {
    std::string word_a = "ab";
    std::string word_b = "aa";
    char seed = 'a';

    /// Word after `iterations` applications of the rule to the seed letter.
    std::vector<char> expand(u32 iterations) const;
};

/// Positions of the requested letter in the period-doubling word of length
/// 2^iterations grown from seed 'a'.
PointConfiguration period_doubling_config(u32 iterations, char letter);

/// Restriction of a configuration to the odd-valued absolute sites, mapped
/// onto a unit-spaced sublattice (site s <-> absolute first_odd + 2s).
/// Throws std::invalid_argument if any occupied site is even.
PointConfiguration odd_sublattice_view(const PointConfiguration& config);

}  // namespace pointspec
