#pragma once

// Closed-form predictions: the limit-periodic peak table of the primes,
// Hardy-Littlewood singular series (Euler product, Ramanujan series, and
// peak-sum representations), period-doubling chain formulas, the
// Riemann-zero structure factor, and the cumulative-intensity model.

#include <cstdint>
#include <vector>

#include "pointspec/numtheory.hpp"

namespace pointspec {

/// One Bragg peak of the prime spectrum: k = m*pi/n with n odd square-free,
/// gcd(m, n) = 1, weight 1/phi(n)^2. The n = 1 peak is reported at k = pi.
struct PeakEntry {
    u64 n = 1;
    u64 m = 1;
    double k = 0.0;
    double weight = 0.0;
};

struct PeakTable {
    u64 n_max = 0;
    std::vector<PeakEntry> entries;  // sorted by k
};

/// All peaks with odd square-free n <= n_max.
PeakTable prime_peak_table(u64 n_max);

/// Finite-size peak height N * mu(2n)^2 / phi(2n)^2 at k = pi*m/n.
/// The fraction m/n must be in lowest terms.
double predicted_peak_height(u64 N, u64 m, u64 n);

/// Pair-sum representation of the singular series: the peak-table sum
/// 1 + cos(pi r) + 2 * sum over odd square-free 3 <= n <= n_max of
/// Re[sum over coprime m < n of exp(i pi r m / n)] / phi(n)^2.
/// Converges to the Hardy-Littlewood constant for even r and to 0 for odd r.
/// The inner sum uses the Ramanujan-sum identity when phi(n) > 64.
double hl_g2(i64 r, u64 n_max);

enum class SingularSeriesMethod { EulerProduct, RamanujanSeries };

struct SingularSeriesValue {
    i64 r = 0;
    double value = 0.0;
    SingularSeriesMethod method = SingularSeriesMethod::EulerProduct;
    u64 truncation = 0;
    bool odd_r = false;  // series vanishes for odd r
};

/// Partial twin-prime constant: product of (1 - 1/(p-1)^2) over odd p <= p_max.
struct TwinConstant {
    double C2 = 0.0;
    u64 p_max = 0;
};
TwinConstant twin_prime_constant(u64 p_max);

/// 2 * C2(p_max) * prod over odd p | r of (p-1)/(p-2); 0 for odd r.
SingularSeriesValue singular_series_pair(i64 r, const TwinConstant& c2);
SingularSeriesValue singular_series_pair(i64 r, u64 p_max);

/// Truncated Ramanujan-series form: sum over square-free q <= q_max of
/// (mu(q)/phi(q))^2 c_q(-r).
SingularSeriesValue singular_series_ramanujan(i64 r, u64 q_max);

/// Bragg peaks of the period-doubling chain (a-sites, unit spacing):
/// k = (2m-1)*pi/2^(n-1) with weight (4*pi/3)*2^(-2n) for levels n >= 1,
/// plus integer-lattice peaks at k = 2*pi*m with weight 4*pi/3.
struct PdPeak {
    double k = 0.0;
    double weight = 0.0;
    u32 level = 0;  // 0 marks the integer-lattice peaks
    u64 m = 0;
};

/// Peaks with 0 < k <= k_max, levels truncated at level_max.
std::vector<PdPeak> pd_structure_factor(double k_max, u32 level_max);

/// One-sided cumulative intensity of the period-doubling chain: the total
/// weight of peaks in (0, K]. Satisfies K^2/(6 pi) <= Z <= K^2/(2 pi).
double pd_cumulative_intensity(double K);

/// Number variance of the period-doubling chain, truncated double sum:
/// (8/9 pi^2) [ sum_m sin^2(2 m pi R)/m^2
///            + sum_{n<=n_max} sum_{m<=m_max} sin^2((2m-1) pi R/2^(n-1))/(2m-1)^2 ].
double pd_number_variance(double R, u32 n_max, u64 m_max);

/// Same quantity with the inner m-sums evaluated in closed form
/// (sum over odd j of sin^2(j y)/j^2 = (pi/4) * triangle(y)).
double pd_number_variance_closed(double R, u32 n_max);

/// Structure factor of the normalized Riemann zeta zeros:
/// S(k) = k/(2 pi) for 0 <= k <= 2 pi, and 1 beyond.
double zeta_structure_factor(double k);

/// tau order metric of the zeta-zero model by quadrature of
/// (1/(2 pi)) integral of (S(k)-1)^2 over |k| <= 2 pi; equals 2/3.
double zeta_tau();

/// Cumulative-intensity model for the primes at density 1/ln(M).
struct PrimeZkModel {
    double exact = 0.0;   // truncated peak sum
    double smooth = 0.0;  // (2K/ln M) * ln(n_max * K / pi)
    bool below_min_k = false;  // K < pi/n_max: no peaks in range
};
PrimeZkModel prime_cumulative_model(double K, u64 M, u64 n_max);

}  // namespace pointspec
