#include "pointspec/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pointspec {

namespace {

// Base primes up to `limit`, simple odd-only sieve.
std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    out.push_back(2);
    std::vector<char> comp((limit + 1) / 2, 0);  // comp[i] <-> 2i+1
    for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
        if (comp[i]) continue;
        u64 p = 2 * i + 1;
        out.push_back(p);
        if (p * p > limit) continue;
        for (u64 j = (p * p - 1) / 2; 2 * j + 1 <= limit; j += p) comp[j] = 1;
    }
    return out;
}

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

PrimeInterval segmented_sieve(u64 M, u64 L) {
    if (L == 0) throw std::domain_error("segmented_sieve: L must be >= 1");
    if (M > kSieveMaxEndpoint - L)
        throw std::out_of_range("segmented_sieve: M+L exceeds supported range");
    const u64 lo = M + 1, hi = M + L;

    PrimeInterval out;
    out.start = M;
    out.length = L;

    const u64 root = isqrt_u64(hi);
    const std::vector<u64> base = small_primes(root);

    if (lo <= 2 && 2 <= hi) out.primes.push_back(2);

    // Odd candidates only; segment of 1<<20 odds = 2M integers per pass.
    const u64 seg_odds = 1u << 20;
    std::vector<char> seg(seg_odds);
    u64 first = lo | 1;  // first odd >= lo
    for (u64 low = first; low <= hi; low += 2 * seg_odds) {
        u64 high = std::min(hi, low + 2 * seg_odds - 2);
        u64 n_odds = (high - low) / 2 + 1;
        std::fill(seg.begin(), seg.begin() + n_odds, 1);
        for (u64 p : base) {
            if (p == 2) continue;
            if (p * p > high) break;
            u64 start = std::max(p * p, ((low + p - 1) / p) * p);
            if ((start & 1) == 0) start += p;
            for (u64 s = start; s <= high; s += 2 * p) seg[(s - low) / 2] = 0;
        }
        for (u64 i = 0; i < n_odds; ++i) {
            if (seg[i]) {
                u64 v = low + 2 * i;
                if (v > 1) out.primes.push_back(v);
            }
        }
    }
    return out;
}

ArithmeticTable::ArithmeticTable(u64 limit) : limit_(limit) {
    mu_.assign(limit + 1, 0);
    phi_.assign(limit + 1, 0);
    spf_.assign(limit + 1, 0);
    if (limit >= 1) {
        mu_[1] = 1;
        phi_[1] = 1;
        spf_[1] = 1;
    }
    // Linear sieve: every n crossed once via its smallest prime factor.
    for (u64 n = 2; n <= limit; ++n) {
        if (spf_[n] == 0) {
            spf_[n] = n;
            mu_[n] = -1;
            phi_[n] = n - 1;
            primes_.push_back(n);
        }
        for (u64 p : primes_) {
            if (p > spf_[n] || n * p > limit) break;
            u64 np = n * p;
            spf_[np] = p;
            if (n % p == 0) {
                mu_[np] = 0;
                phi_[np] = phi_[n] * p;
                break;
            }
            mu_[np] = -mu_[n];
            phi_[np] = phi_[n] * (p - 1);
        }
    }
}

namespace {

// Distinct prime factors by trial division; adequate for the n this library
// feeds it (peak denominators, Ramanujan moduli).
std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

int mobius(u64 n) {
    if (n == 0) throw std::domain_error("mobius: n must be >= 1");
    if (n == 1) return 1;
    int parity = 0;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++parity;
        }
    }
    if (n > 1) ++parity;
    return (parity & 1) ? -1 : 1;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be >= 1");
    u64 result = n;
    for (u64 p : distinct_prime_factors(n)) result -= result / p;
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for all n < 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

double ramanujan_sum(u64 q, i64 r) {
    if (q == 0) throw std::domain_error("ramanujan_sum: q must be >= 1");
    if (q == 1) return 1.0;
    double acc = 0.0;
    const double w = 2.0 * std::numbers::pi * static_cast<double>(r) /
                     static_cast<double>(q);
    for (u64 a = 1; a < q; ++a) {
        if (std::gcd(a, q) == 1) acc += std::cos(w * static_cast<double>(a));
    }
    return acc;
}

i64 ramanujan_sum_exact(u64 q, i64 r) {
    if (q == 0) throw std::domain_error("ramanujan_sum_exact: q must be >= 1");
    u64 rr = static_cast<u64>(r < 0 ? -r : r) % q;
    u64 g = (rr == 0) ? q : std::gcd(rr, q);
    u64 qg = q / g;
    int mu_qg = mobius(qg);
    if (mu_qg == 0) return 0;
    return static_cast<i64>(mu_qg) *
           static_cast<i64>(euler_phi(q) / euler_phi(qg));
}

std::vector<u64> coprime_residues(u64 n) {
    if (n == 0) throw std::domain_error("coprime_residues: n must be >= 1");
    if (n == 1) return {1};
    std::vector<u64> out;
    out.reserve(euler_phi(n));
    for (u64 m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) out.push_back(m);
    return out;
}

std::vector<u64> odd_squarefree_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit == 0) return out;
    ArithmeticTable table(limit);
    for (u64 n = 1; n <= limit; n += 2)
        if (table.squarefree(n)) out.push_back(n);
    return out;
}

}  // namespace pointspec
