#pragma once

// Arithmetic kernels: segmented sieving, multiplicative functions,
// deterministic 64-bit primality, Ramanujan sums.

#include <cstdint>
#include <vector>

namespace pointspec {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;

/// Primes p with M < p <= M+L, positions stored as absolute integers.
struct PrimeInterval {
    u64 start = 0;   // M (exclusive lower bound)
    u64 length = 0;  // L
    std::vector<u64> primes;

    u64 count() const { return primes.size(); }
};

// Largest interval endpoint the sieve accepts (base sieve up to 1e6 covers
// squares to 1e12).
inline constexpr u64 kSieveMaxEndpoint = 1'000'000'000'000ULL;

/// Primes in (M, M+L] by a segmented sieve of Eratosthenes.
/// Throws std::out_of_range when M+L overflows or exceeds kSieveMaxEndpoint.
PrimeInterval segmented_sieve(u64 M, u64 L);

/// Moebius mu, phi and square-free flags for all n <= limit, built by one
/// linear sieve pass. Immutable after construction; safe to share.
struct ArithmeticTable {
    explicit ArithmeticTable(u64 limit);

    u64 limit() const { return limit_; }
    int mobius(u64 n) const { return mu_[n]; }
    u64 phi(u64 n) const { return phi_[n]; }
    bool squarefree(u64 n) const { return mu_[n] != 0; }
    u64 smallest_prime_factor(u64 n) const { return spf_[n]; }
    const std::vector<u64>& primes() const { return primes_; }

  private:
    u64 limit_;
    std::vector<i64> mu_;
    std::vector<u64> phi_;
    std::vector<u64> spf_;
    std::vector<u64> primes_;
};

/// mu(n); n = 0 throws std::domain_error.
int mobius(u64 n);

/// Euler totient phi(n); n = 0 throws std::domain_error.
u64 euler_phi(u64 n);

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(u64 n);

/// Ramanujan sum c_q(r) as the cosine sum over residues coprime to q.
/// O(phi(q)); the trigonometric form of the definition.
double ramanujan_sum(u64 q, i64 r);

/// c_q(r) evaluated exactly: mu(q/g) * phi(q) / phi(q/g) with g = gcd(q, |r|).
i64 ramanujan_sum_exact(u64 q, i64 r);

/// Sorted residues 1 <= m < n with gcd(m, n) = 1; {1} when n = 1.
std::vector<u64> coprime_residues(u64 n);

/// Odd square-free n <= limit in increasing order.
std::vector<u64> odd_squarefree_up_to(u64 limit);

}  // namespace pointspec
