#include "pointspec/config.hpp"

#include <cmath>
#include <stdexcept>

namespace pointspec {

std::string to_string(PointKind kind) {
    switch (kind) {
        case PointKind::Primes: return "primes";
        case PointKind::IntegerLattice: return "integer-lattice";
        case PointKind::LatticeGas: return "lattice-gas";
        case PointKind::PeriodDoublingA: return "period-doubling-a";
        case PointKind::PeriodDoublingB: return "period-doubling-b";
        case PointKind::Custom: return "custom";
    }
    return "custom";
}

PointKind point_kind_from_string(const std::string& name) {
    if (name == "primes") return PointKind::Primes;
    if (name == "integer-lattice") return PointKind::IntegerLattice;
    if (name == "lattice-gas") return PointKind::LatticeGas;
    if (name == "period-doubling-a") return PointKind::PeriodDoublingA;
    if (name == "period-doubling-b") return PointKind::PeriodDoublingB;
    if (name == "custom") return PointKind::Custom;
    throw std::invalid_argument("unknown point kind: " + name);
}

void PointConfiguration::validate() const {
    u64 prev = 0;
    bool first = true;
    for (u64 pos : occupied) {
        if (pos >= length)
            throw std::invalid_argument("occupied position outside [0, length)");
        if (!first && pos <= prev)
            throw std::invalid_argument("occupied positions not strictly increasing");
        prev = pos;
        first = false;
    }
}

PointConfiguration primes_config(u64 M, u64 L) {
    PrimeInterval interval = segmented_sieve(M, L);
    PointConfiguration config;
    config.origin = static_cast<i64>(M) + 1;
    config.length = L;
    config.kind = PointKind::Primes;
    config.occupied.reserve(interval.primes.size());
    for (u64 p : interval.primes) config.occupied.push_back(p - M - 1);
    return config;
}

PointConfiguration integer_lattice_config(u64 length, double f) {
    if (length == 0) throw std::domain_error("integer_lattice_config: empty lattice");
    if (!(f > 0.0 && f <= 1.0))
        throw std::domain_error("integer_lattice_config: f must be in (0, 1]");
    double inv = 1.0 / f;
    u64 spacing = static_cast<u64>(std::llround(inv));
    if (spacing == 0 || std::abs(inv - static_cast<double>(spacing)) > 1e-9)
        throw std::domain_error("integer_lattice_config: 1/f must be an integer");
    PointConfiguration config;
    config.length = length;
    config.spacing = spacing;
    config.kind = PointKind::IntegerLattice;
    for (u64 pos = 0; pos < length; pos += spacing) config.occupied.push_back(pos);
    return config;
}

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

PointConfiguration lattice_gas_config(u64 length, double f, u64 seed) {
    if (!(f >= 0.0 && f <= 1.0))
        throw std::domain_error("lattice_gas_config: f must be in [0, 1]");
    PointConfiguration config;
    config.length = length;
    config.kind = PointKind::LatticeGas;
    if (f == 0.0) return config;
    const u64 key = splitmix64(seed);
    // Occupy when hash < f * 2^64; f = 1 occupies everything.
    const bool all = (f >= 1.0);
    const u64 threshold = all ? ~0ULL : static_cast<u64>(f * 18446744073709551616.0);
    for (u64 site = 0; site < length; ++site) {
        if (all || splitmix64(key ^ site) < threshold) config.occupied.push_back(site);
    }
    return config;
}

std::vector<char> SubstitutionRule::expand(u32 iterations) const {
    if (word_a.empty() || word_b.empty())
        throw std::domain_error("substitution rule must be total over the alphabet");
    std::vector<char> word{seed};
    for (u32 it = 0; it < iterations; ++it) {
        std::vector<char> next;
        next.reserve(word.size() * 2);
        for (char c : word) {
            const std::string& image = (c == 'a') ? word_a : word_b;
            next.insert(next.end(), image.begin(), image.end());
        }
        if (next.size() <= word.size())
            throw std::domain_error("substitution rule does not grow the word");
        word.swap(next);
    }
    return word;
}

PointConfiguration period_doubling_config(u32 iterations, char letter) {
    if (iterations < 1)
        throw std::domain_error("period_doubling_config: iterations must be >= 1");
    if (iterations > 30)
        throw std::out_of_range("period_doubling_config: word longer than 2^30");
    if (letter != 'a' && letter != 'b')
        throw std::domain_error("period_doubling_config: letter must be 'a' or 'b'");
    SubstitutionRule rule;
    std::vector<char> word = rule.expand(iterations);
    PointConfiguration config;
    config.length = word.size();
    config.kind = (letter == 'a') ? PointKind::PeriodDoublingA
                                  : PointKind::PeriodDoublingB;
    for (u64 pos = 0; pos < word.size(); ++pos)
        if (word[pos] == letter) config.occupied.push_back(pos);
    return config;
}

PointConfiguration odd_sublattice_view(const PointConfiguration& config) {
    const i64 o = config.origin;
    const i64 first_odd = (o % 2 != 0) ? o : o + 1;
    PointConfiguration sub;
    sub.origin = first_odd;
    sub.length = (config.length + static_cast<u64>(o % 2 != 0 ? 1 : 0)) / 2;
    sub.spacing = config.spacing * 2;
    sub.kind = config.kind;
    sub.occupied.reserve(config.occupied.size());
    for (u64 pos : config.occupied) {
        i64 abs = o + static_cast<i64>(pos);
        if (abs % 2 == 0)
            throw std::invalid_argument(
                "odd_sublattice_view: configuration has even occupied sites");
        sub.occupied.push_back(static_cast<u64>((abs - first_odd) / 2));
    }
    return sub;
}

}  // namespace pointspec
