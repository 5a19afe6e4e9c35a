#include "pointspec/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pointspec {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

PeakTable prime_peak_table(u64 n_max) {
    if (n_max == 0) throw std::domain_error("prime_peak_table: n_max must be >= 1");
    ArithmeticTable table(n_max);
    PeakTable out;
    out.n_max = n_max;
    out.entries.push_back({1, 1, kPi, 1.0});
    for (u64 n = 3; n <= n_max; n += 2) {
        if (!table.squarefree(n)) continue;
        double w = 1.0 / (static_cast<double>(table.phi(n)) *
                          static_cast<double>(table.phi(n)));
        for (u64 m = 1; m < n; ++m) {
            if (std::gcd(m, n) != 1) continue;
            out.entries.push_back(
                {n, m, kPi * static_cast<double>(m) / static_cast<double>(n), w});
        }
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const PeakEntry& a, const PeakEntry& b) {
                  if (a.k != b.k) return a.k < b.k;
                  return a.n < b.n;
              });
    return out;
}

double predicted_peak_height(u64 N, u64 m, u64 n) {
    if (n == 0 || std::gcd(m, n) != 1)
        throw std::domain_error("predicted_peak_height: m/n must be in lowest terms");
    int mu2n = mobius(2 * n);
    if (mu2n == 0) return 0.0;
    double phi2n = static_cast<double>(euler_phi(2 * n));
    return static_cast<double>(N) / (phi2n * phi2n);
}

double hl_g2(i64 r, u64 n_max) {
    if (n_max == 0) throw std::domain_error("hl_g2: n_max must be >= 1");
    const bool even_r = (r % 2 == 0);
    // Forward peak plus the k = pi peak; cos(pi r) is +-1 for integer r.
    double total = 1.0 + ((r % 2 == 0) ? 1.0 : -1.0);
    if (n_max < 3) return total;
    ArithmeticTable table(n_max);
    for (u64 n = 3; n <= n_max; n += 2) {
        if (!table.squarefree(n)) continue;
        const u64 phi = table.phi(n);
        double inner;
        if (even_r) {
            i64 half = r / 2;
            if (phi > 64) {
                // c_n(r/2) by the Moebius identity.
                u64 a = static_cast<u64>(half < 0 ? -half : half) %
                        n;
                u64 g = (a == 0) ? n : std::gcd(a, n);
                u64 ng = n / g;
                int mu_ng = table.mobius(ng);
                inner = (mu_ng == 0)
                            ? 0.0
                            : static_cast<double>(mu_ng) *
                                  static_cast<double>(phi / table.phi(ng));
            } else {
                inner = 0.0;
                const double w = 2.0 * kPi * static_cast<double>(half) /
                                 static_cast<double>(n);
                for (u64 m = 1; m < n; ++m)
                    if (std::gcd(m, n) == 1)
                        inner += std::cos(w * static_cast<double>(m));
            }
        } else {
            // Odd r: the real parts cancel pairwise (m <-> n-m); evaluate
            // directly so the truncated sum is returned as computed.
            inner = 0.0;
            const double w = kPi * static_cast<double>(r) / static_cast<double>(n);
            for (u64 m = 1; m < n; ++m)
                if (std::gcd(m, n) == 1)
                    inner += std::cos(w * static_cast<double>(m));
        }
        total += 2.0 * inner /
                 (static_cast<double>(phi) * static_cast<double>(phi));
    }
    return total;
}

TwinConstant twin_prime_constant(u64 p_max) {
    if (p_max < 3) throw std::domain_error("twin_prime_constant: p_max must be >= 3");
    TwinConstant out;
    out.p_max = p_max;
    PrimeInterval primes = segmented_sieve(2, p_max - 2);  // primes in (2, p_max]
    long double prod = 1.0L;
    for (u64 p : primes.primes) {
        long double pm1 = static_cast<long double>(p - 1);
        prod *= (1.0L - 1.0L / (pm1 * pm1));
    }
    out.C2 = static_cast<double>(prod);
    return out;
}

SingularSeriesValue singular_series_pair(i64 r, const TwinConstant& c2) {
    SingularSeriesValue out;
    out.r = r;
    out.method = SingularSeriesMethod::EulerProduct;
    out.truncation = c2.p_max;
    if (r % 2 != 0) {
        out.odd_r = true;
        out.value = 0.0;
        return out;
    }
    if (r == 0) throw std::domain_error("singular_series_pair: r must be nonzero");
    u64 rr = static_cast<u64>(r < 0 ? -r : r);
    double value = 2.0 * c2.C2;
    u64 v = rr;
    while (v % 2 == 0 && v > 0) v /= 2;
    for (u64 p = 3; p * p <= v; p += 2) {
        if (v % p == 0) {
            value *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) value *= static_cast<double>(v - 1) / static_cast<double>(v - 2);
    out.value = value;
    return out;
}

SingularSeriesValue singular_series_pair(i64 r, u64 p_max) {
    return singular_series_pair(r, twin_prime_constant(p_max));
}

SingularSeriesValue singular_series_ramanujan(i64 r, u64 q_max) {
    if (q_max == 0)
        throw std::domain_error("singular_series_ramanujan: q_max must be >= 1");
    SingularSeriesValue out;
    out.r = r;
    out.method = SingularSeriesMethod::RamanujanSeries;
    out.truncation = q_max;
    out.odd_r = (r % 2 != 0);
    ArithmeticTable table(q_max);
    u64 rr = static_cast<u64>(r < 0 ? -r : r);
    long double acc = 0.0L;
    for (u64 q = 1; q <= q_max; ++q) {
        int mu = table.mobius(q);
        if (mu == 0) continue;
        u64 a = (q == 0) ? 0 : rr % q;
        u64 g = (a == 0) ? q : std::gcd(a, q);
        u64 qg = q / g;
        int mu_qg = table.mobius(qg);
        if (mu_qg == 0) continue;  // cannot happen for square-free q
        long double cq = static_cast<long double>(mu_qg) *
                         static_cast<long double>(table.phi(q) / table.phi(qg));
        long double phi_q = static_cast<long double>(table.phi(q));
        acc += cq / (phi_q * phi_q);
    }
    out.value = static_cast<double>(acc);
    return out;
}

std::vector<PdPeak> pd_structure_factor(double k_max, u32 level_max) {
    if (!(k_max > 0.0)) throw std::domain_error("pd_structure_factor: k_max must be > 0");
    std::vector<PdPeak> peaks;
    for (u64 m = 1; 2.0 * kPi * static_cast<double>(m) <= k_max; ++m)
        peaks.push_back({2.0 * kPi * static_cast<double>(m), 4.0 * kPi / 3.0, 0, m});
    for (u32 n = 1; n <= level_max; ++n) {
        double denom = std::ldexp(1.0, static_cast<int>(n) - 1);  // 2^(n-1)
        double w = (4.0 * kPi / 3.0) * std::ldexp(1.0, -2 * static_cast<int>(n));
        if (kPi / denom > k_max) continue;
        for (u64 m = 1;; ++m) {
            double k = static_cast<double>(2 * m - 1) * kPi / denom;
            if (k > k_max) break;
            peaks.push_back({k, w, n, m});
        }
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const PdPeak& a, const PdPeak& b) { return a.k < b.k; });
    return peaks;
}

double pd_cumulative_intensity(double K) {
    if (!(K > 0.0)) throw std::domain_error("pd_cumulative_intensity: K must be > 0");
    long double acc = 0.0L;
    // Integer-lattice peaks at 2 pi m.
    acc += (4.0L * kPi / 3.0L) * std::floor(K / (2.0 * kPi));
    // Dyadic levels: count of peaks (2m-1) pi / 2^(n-1) <= K. Terms fall off
    // as 2^-n; 50 levels put the tail below 1e-15.
    for (int n = 1; n <= 50; ++n) {
        double count = std::floor(0.5 + std::ldexp(K / kPi, n - 2));
        if (count <= 0.0) continue;
        long double w = (4.0L * kPi / 3.0L) * std::ldexp(1.0L, -2 * n);
        acc += w * static_cast<long double>(count);
    }
    return static_cast<double>(acc);
}

namespace {

// sum over m >= 1 of sin^2(2 m pi R)/m^2 = pi^2 * u (1 - 2u), u = R mod 1/2.
double pd_first_sum_closed(double R) {
    double u = R - std::floor(2.0 * R) / 2.0;
    return kPi * kPi * u * (1.0 - 2.0 * u);
}

// sum over odd j of sin^2(j y)/j^2 = (pi/4) * min(y mod pi, pi - y mod pi).
double odd_sine_sum_closed(double y) {
    double t = std::fmod(y, kPi);
    if (t < 0) t += kPi;
    return (kPi / 4.0) * std::min(t, kPi - t);
}

}  // namespace

double pd_number_variance(double R, u32 n_max, u64 m_max) {
    if (!(R > 0.0)) throw std::domain_error("pd_number_variance: R must be > 0");
    long double first = 0.0L;
    for (u64 m = 1; m <= m_max; ++m) {
        double s = std::sin(2.0 * static_cast<double>(m) * kPi * R);
        first += static_cast<long double>(s * s) /
                 (static_cast<long double>(m) * static_cast<long double>(m));
    }
    long double second = 0.0L;
    for (u32 n = 1; n <= n_max; ++n) {
        double y = kPi * R / std::ldexp(1.0, static_cast<int>(n) - 1);
        long double level = 0.0L;
        for (u64 m = 1; m <= m_max; ++m) {
            double j = static_cast<double>(2 * m - 1);
            double s = std::sin(j * y);
            level += static_cast<long double>(s * s) /
                     static_cast<long double>(j * j);
        }
        second += level;
    }
    return static_cast<double>((8.0L / (9.0L * kPi * kPi)) * (first + second));
}

double pd_number_variance_closed(double R, u32 n_max) {
    if (!(R > 0.0)) throw std::domain_error("pd_number_variance_closed: R must be > 0");
    long double total = pd_first_sum_closed(R);
    for (u32 n = 1; n <= n_max; ++n) {
        double y = kPi * R / std::ldexp(1.0, static_cast<int>(n) - 1);
        total += odd_sine_sum_closed(y);
    }
    return static_cast<double>((8.0L / (9.0L * kPi * kPi)) * total);
}

double zeta_structure_factor(double k) {
    if (k < 0.0) throw std::domain_error("zeta_structure_factor: k must be >= 0");
    if (k <= 2.0 * kPi) return k / (2.0 * kPi);
    return 1.0;
}

double zeta_tau() {
    // (1/pi) * integral over [0, 2 pi] of (k/(2 pi) - 1)^2 dk by Simpson.
    const int n = 1 << 12;
    const double h = 2.0 * kPi / n;
    auto f = [](double k) {
        double d = k / (2.0 * kPi) - 1.0;
        return d * d;
    };
    long double acc = f(0.0) + f(2.0 * kPi);
    for (int i = 1; i < n; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return static_cast<double>(acc * h / 3.0L / kPi);
}

PrimeZkModel prime_cumulative_model(double K, u64 M, u64 n_max) {
    if (!(K > 0.0)) throw std::domain_error("prime_cumulative_model: K must be > 0");
    if (n_max == 0) throw std::domain_error("prime_cumulative_model: n_max must be >= 1");
    if (M < 3) throw std::domain_error("prime_cumulative_model: M must be >= 3");
    PrimeZkModel out;
    const double lnM = std::log(static_cast<double>(M));
    const double rho = 1.0 / lnM;
    if (K < kPi / static_cast<double>(n_max)) {
        out.below_min_k = true;
        return out;
    }
    // Exact truncated peak sum: Z = 4 pi rho * sum over odd square-free
    // n <= n_max of phi(n)^-2 * #{m >= 1 coprime to n, m pi / n <= K}.
    ArithmeticTable table(n_max);
    long double acc = 0.0L;
    for (u64 n = 1; n <= n_max; n += 2) {
        if (!table.squarefree(n)) continue;
        double x = K * static_cast<double>(n) / kPi;
        // Coprime count up to x via Moebius over the divisors of n.
        u64 nn = n;
        std::vector<u64> prime_divs;
        while (nn > 1) {
            u64 p = table.smallest_prime_factor(nn);
            prime_divs.push_back(p);
            while (nn % p == 0) nn /= p;
        }
        long double count = 0.0L;
        const u64 nd = prime_divs.size();
        for (u64 mask = 0; mask < (1ULL << nd); ++mask) {
            u64 d = 1;
            int sign = 1;
            for (u64 b = 0; b < nd; ++b)
                if (mask & (1ULL << b)) {
                    d *= prime_divs[b];
                    sign = -sign;
                }
            count += sign * std::floor(x / static_cast<double>(d) + 1e-12);
        }
        if (count <= 0.0L) continue;
        long double phi = static_cast<long double>(table.phi(n));
        acc += count / (phi * phi);
    }
    out.exact = static_cast<double>(4.0L * kPi * rho * acc);
    // Smooth form; sum over odd square-free n in (a, b) of 1/phi(n) grows as
    // (1/2) ln(b/a), hence the prefactor 2K/ln M.
    out.smooth = (2.0 * K / lnM) * std::log(static_cast<double>(n_max) * K / kPi);
    return out;
}

}  // namespace pointspec
