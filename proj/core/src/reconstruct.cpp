#include "pointspec/reconstruct.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pointspec {

namespace {

constexpr double kPi = std::numbers::pi;

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// exp(2 pi i * (a*b mod L) / L); keeps peak phases exact for large windows.
std::complex<double> unit_phase(u64 a, u64 b, u64 L) {
    u64 r = static_cast<u64>((static_cast<__uint128_t>(a) * b) % L);
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) /
                               static_cast<double>(L));
}

// Residue sum Q(k) = sum over 0 <= rho < 2n with gcd(rho, 2n) = 1 of
// exp(-i k rho) at k = 2 pi j / L, evaluated exactly through
// Q = sum over square-free d | 2n of mu(d) * G_d,
// G_d = (1 - exp(-2ikn)) / (1 - exp(-ikd)), or 2n/d when kd = 0 (mod 2pi).
std::complex<double> coprime_residue_sum(u64 j, u64 period, u64 L,
                                         const std::vector<u64>& odd_primes) {
    const std::complex<double> one{1.0, 0.0};
    const u64 j_period = static_cast<u64>(
        (static_cast<__uint128_t>(j) * period) % L);
    const std::complex<double> pref =
        one - std::conj(unit_phase(j, period, L));
    std::complex<double> total{0.0, 0.0};
    const u64 nd = odd_primes.size();
    for (u64 mask = 0; mask < (2ULL << nd); ++mask) {
        u64 d = (mask & 1) ? 2 : 1;
        int mu = (mask & 1) ? -1 : 1;
        for (u64 b = 0; b < nd; ++b)
            if (mask & (2ULL << b)) {
                d *= odd_primes[b];
                mu = -mu;
            }
        u64 jd = static_cast<u64>((static_cast<__uint128_t>(j) * d) % L);
        if (jd == 0) {
            total += static_cast<double>(mu) *
                     static_cast<double>(period / d);
        } else if (j_period != 0) {
            total += static_cast<double>(mu) * pref /
                     (one - std::conj(unit_phase(j, d, L)));
        }
    }
    return total;
}

}  // namespace

u64 estimate_count(u64 M, u64 L) {
    if (M < 3) throw std::domain_error("estimate_count: M must be >= 3");
    if (L == 0) return 0;
    double hi = static_cast<double>(M + L);
    double lo = static_cast<double>(M);
    double est = hi / std::log(hi) - lo / std::log(lo);
    if (est < 0.0) est = 0.0;
    return static_cast<u64>(std::llround(est));
}

SynthesizedField synthesize_field(u64 M, u64 L, u64 n_max, double threshold) {
    if (L < 2) throw std::domain_error("synthesize_field: L must be >= 2");
    if (n_max == 0) throw std::domain_error("synthesize_field: n_max must be >= 1");
    if (n_max >= L / 2)
        throw std::domain_error("synthesize_field: n_max must be < L/2");

    SynthesizedField field;
    field.M = M;
    field.L = L;
    field.n_max = n_max;
    field.N_target = estimate_count(M, L);
    const double N = static_cast<double>(field.N_target);
    field.threshold = (threshold < 0.0) ? std::sqrt(N) : threshold;
    field.field_half.assign(L / 2 + 1, {0.0, 0.0});

    const u64 origin = M + 1;  // absolute position of site 0

    // Adds v (in the window frame) to the stored bin for grid index j,
    // folding j > L/2 onto the conjugate bin.
    auto add_bin = [&](i64 j, std::complex<double> v) {
        if (j <= 0 || j >= static_cast<i64>(L)) return;
        if (j <= static_cast<i64>(L / 2)) {
            field.field_half[static_cast<u64>(j)] += v;
        } else {
            field.field_half[L - static_cast<u64>(j)] += std::conj(v);
        }
    };

    ArithmeticTable table(n_max);
    for (u64 n = 1; n <= n_max; n += 2) {
        if (!table.squarefree(n)) continue;
        const u64 phi = table.phi(n);
        const int mu_n = table.mobius(n);
        const u64 period = 2 * n;
        const bool on_grid = (L % period == 0);
        const u64 T = L / period;  // full periods inside the window
        if (T == 0) continue;
        // First full period at or after the window start.
        const u64 t0 = (origin + period - 1) / period;
        const u64 pt0 = static_cast<u64>(
            (static_cast<__uint128_t>(period) * t0) % L);
        // Odd prime factors of n, for the divisor form of the residue sum.
        std::vector<u64> odd_primes;
        {
            u64 nn = n;
            while (nn > 1) {
                u64 p = table.smallest_prime_factor(nn);
                odd_primes.push_back(p);
                nn /= p;
            }
        }

        const u64 m_hi = (n == 1) ? 1 : n - 1;
        for (u64 m = 1; m <= m_hi; ++m) {
            if (n > 1 && std::gcd(m, n) != 1) continue;
            // c_{2n}(m) = mu(2n) for odd m, mu(n) for even m (n odd square-free).
            const int c = (m % 2 == 1) ? -mu_n : mu_n;
            const double peak_value =
                N * static_cast<double>(c) / static_cast<double>(phi);

            PeakLedgerEntry entry;
            entry.n = n;
            entry.m = m;
            entry.on_grid = on_grid;
            entry.C1 = {peak_value / static_cast<double>(T), 0.0};

            if (on_grid) {
                // j = m L / 2n is exact; the full weight lands there. The
                // peak amplitude is real at the peak wavenumber because
                // k * base = 0 (mod 2 pi); only the window phase remains.
                const u64 j = m * T;
                add_bin(static_cast<i64>(j),
                        peak_value * unit_phase(j, origin, L));
                entry.grid_points = 1;
            } else {
                const double j_star = static_cast<double>(m) *
                                      static_cast<double>(L) /
                                      static_cast<double>(period);
                const u64 rem = L % period;  // period * T = L - rem
                const double amplitude =
                    N / (static_cast<double>(phi) * static_cast<double>(T));
                u32 used = 0;

                auto eval_at = [&](i64 sj) -> std::complex<double> {
                    const u64 j = static_cast<u64>(sj);
                    // f = exp(-i k period); 1 - f^T via exact mod phases.
                    const std::complex<double> f =
                        std::conj(unit_phase(j, period, L));
                    // f^T = exp(-i k (L - rem)) = exp(+i k rem)
                    const std::complex<double> fT = unit_phase(j, rem, L);
                    const std::complex<double> one{1.0, 0.0};
                    std::complex<double> geom;
                    if (std::abs(one - f) < 1e-12) {
                        geom = {static_cast<double>(T), 0.0};
                    } else {
                        geom = (one - fT) / (one - f);
                    }
                    std::complex<double> Q =
                        coprime_residue_sum(j, period, L, odd_primes);
                    // Window phase for the first full period.
                    return amplitude * Q * std::conj(unit_phase(j, pt0, L)) *
                           geom;
                };

                // The grid points bracketing the peak are always adjacent;
                // the threshold decides how far the wings extend beyond them.
                const i64 j_lo = static_cast<i64>(std::floor(j_star));
                const int max_span = 64;
                for (int side = 0; side < 2; ++side) {
                    for (int step = 0; step <= max_span; ++step) {
                        i64 j = (side == 0) ? j_lo + 1 + step : j_lo - step;
                        if (j <= 0) break;
                        std::complex<double> eta_abs = eval_at(j);
                        if (step > 0 && std::abs(eta_abs) <= field.threshold)
                            break;
                        add_bin(j, eta_abs *
                                       unit_phase(static_cast<u64>(j), origin, L));
                        ++used;
                    }
                }
                entry.grid_points = used;
            }
            field.ledger.push_back(entry);
        }
    }
    // Forward scattering is the target count exactly.
    field.field_half[0] = {N, 0.0};
    return field;
}

std::vector<double> inverse_density(const SynthesizedField& field) {
    const u64 L = field.L;
    std::vector<std::complex<double>> half = field.field_half;
    std::vector<double> out(L);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(L),
                                    reinterpret_cast<fftw_complex*>(half.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("inverse_density: FFT plan failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / static_cast<double>(L);
    for (double& v : out) v *= scale;
    return out;
}

namespace {

std::vector<u64> factorize(u64 v, const std::vector<u64>& primes) {
    std::vector<u64> factors;
    for (u64 p : primes) {
        if (p * p > v) break;
        while (v % p == 0) {
            factors.push_back(p);
            v /= p;
        }
    }
    if (v > 1) factors.push_back(v);
    return factors;
}

}  // namespace

ReconstructionReport reconstruct_primes(u64 M, u64 L, u64 n_max,
                                        double threshold) {
    SynthesizedField field = synthesize_field(M, L, n_max, threshold);
    std::vector<double> density = inverse_density(field);

    // Rank sites by predicted density, ties to the smaller position.
    std::vector<u64> order(L);
    std::iota(order.begin(), order.end(), 0);
    const u64 n_pred = std::min<u64>(field.N_target, L);
    std::partial_sort(order.begin(), order.begin() + static_cast<i64>(n_pred),
                      order.end(), [&](u64 a, u64 b) {
                          if (density[a] != density[b])
                              return density[a] > density[b];
                          return a < b;
                      });

    std::vector<u64> predicted(order.begin(),
                               order.begin() + static_cast<i64>(n_pred));
    for (u64& s : predicted) s += M + 1;  // absolute values
    std::sort(predicted.begin(), predicted.end());

    PrimeInterval truth = segmented_sieve(M, L);
    const std::vector<u64>& primes = truth.primes;

    ReconstructionReport report;
    report.M = M;
    report.L = L;
    report.n_max = n_max;
    report.N_predicted = n_pred;

    std::vector<u64> wrong;
    u64 i = 0, j = 0;
    while (i < predicted.size() && j < primes.size()) {
        if (predicted[i] == primes[j]) {
            ++report.N_correct;
            ++i;
            ++j;
        } else if (predicted[i] < primes[j]) {
            wrong.push_back(predicted[i]);
            ++i;
        } else {
            ++j;
        }
    }
    while (i < predicted.size()) wrong.push_back(predicted[i++]);

    report.N_incorrect = wrong.size();
    report.N_unpredicted = primes.size() - report.N_correct;
    report.t1 = report.N_incorrect
                    ? static_cast<double>(report.N_correct) /
                          static_cast<double>(report.N_incorrect)
                    : std::numeric_limits<double>::infinity();
    report.t2 = report.N_unpredicted
                    ? static_cast<double>(report.N_correct) /
                          static_cast<double>(report.N_unpredicted)
                    : std::numeric_limits<double>::infinity();

    std::vector<u64> base =
        segmented_sieve(
            1, static_cast<u64>(std::sqrt(static_cast<double>(M + L))) + 2)
            .primes;
    for (u64 v : wrong)
        report.false_positives.push_back({v, factorize(v, base)});
    return report;
}

std::vector<ReconstructionReport> accuracy_curve(
    u64 M, u64 L, const std::vector<u64>& n_max_list) {
    std::vector<ReconstructionReport> out;
    out.reserve(n_max_list.size());
    for (u64 n_max : n_max_list) out.push_back(reconstruct_primes(M, L, n_max));
    return out;
}

}  // namespace pointspec
