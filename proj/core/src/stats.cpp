#include "pointspec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pointspec/parallel.hpp"

namespace pointspec {

namespace {

constexpr double kPi = std::numbers::pi;
using u128 = unsigned __int128;

}  // namespace

VarianceCurve number_variance_direct(const PointConfiguration& config,
                                     const std::vector<u64>& R_list) {
    const u64 L = config.length;
    std::vector<u32> prefix(L + 1, 0);
    for (u64 pos : config.occupied) prefix[pos + 1] = 1;
    for (u64 i = 0; i < L; ++i) prefix[i + 1] += prefix[i];

    VarianceCurve curve;
    curve.estimator = "direct-window";
    for (u64 R : R_list) {
        const u64 w = 2 * R;
        if (w == 0 || w >= L)
            throw std::domain_error("number_variance_direct: need 0 < 2R < length");
        const u64 placements = L - w + 1;
        u128 sum = 0, sum2 = 0;
        for (u64 t = 0; t < placements; ++t) {
            u64 c = prefix[t + w] - prefix[t];
            sum += c;
            sum2 += static_cast<u128>(c) * c;
        }
        long double n = static_cast<long double>(placements);
        long double mean = static_cast<long double>(sum) / n;
        long double var = static_cast<long double>(sum2) / n - mean * mean;
        curve.R.push_back(static_cast<double>(R));
        curve.sigma2.push_back(static_cast<double>(var));
    }
    return curve;
}

VarianceCurve number_variance_fourier(const Spectrum& spectrum,
                                      const std::vector<double>& R_list) {
    const u64 L = spectrum.grid_size;
    const double rho = static_cast<double>(spectrum.points) / static_cast<double>(L);
    const double dk = 2.0 * kPi / static_cast<double>(L);
    const bool even = (L % 2 == 0);
    const u64 last = spectrum.eta_half.size() - 1;

    VarianceCurve curve;
    curve.estimator = "fourier";
    for (double R : R_list) {
        if (!(R > 0.0))
            throw std::domain_error("number_variance_fourier: R must be > 0");
        long double acc = 0.0L;
        for (u64 j = 1; j <= last; ++j) {
            double k = dk * static_cast<double>(j);
            double s = std::sin(k * R);
            double kernel = 2.0 * s * s / (R * k * k);
            double weight = (even && j == last) ? 1.0 : 2.0;
            acc += static_cast<long double>(weight * spectrum.S(j) * kernel);
        }
        double sigma2 = (rho * R / kPi) * static_cast<double>(acc) * dk;
        curve.R.push_back(R);
        curve.sigma2.push_back(sigma2);
    }
    return curve;
}

TauResult tau_discrete(const PointConfiguration& config) {
    const PointConfiguration* view = &config;
    PointConfiguration sub;
    if (config.kind == PointKind::Primes) {
        sub = odd_sublattice_view(config);
        view = &sub;
    }
    const u64 Ns = view->length;
    if (Ns < 2) throw std::domain_error("tau_discrete: need at least 2 sites");
    Spectrum spec = density_variable(*view);
    const double f =
        static_cast<double>(view->occupied.size()) / static_cast<double>(Ns);
    const double base = 1.0 - f;
    const bool even = (Ns % 2 == 0);
    const u64 last = spec.eta_half.size() - 1;
    long double acc = 0.0L;
    for (u64 j = 1; j <= last; ++j) {
        long double d = spec.S(j) - base;
        double weight = (even && j == last) ? 1.0 : 2.0;
        acc += weight * d * d;
    }
    TauResult out;
    out.tau = static_cast<double>(acc / static_cast<long double>(Ns));
    out.f = f;
    out.sites = Ns;
    out.grid = Ns - 1;
    out.kind = config.kind;
    return out;
}

TauPhaseMap tau_phase_map(const std::vector<u64>& M_list,
                          const std::vector<u64>& L_list, unsigned threads) {
    TauPhaseMap map;
    map.M_values = M_list;
    map.L_values = L_list;
    map.ln_tau.assign(M_list.size() * L_list.size(), 0.0);
    parallel_for(
        M_list.size(),
        [&](u64 i) {
            const u64 M = M_list[i];
            const u64 L_max = *std::max_element(L_list.begin(), L_list.end());
            PrimeInterval all = segmented_sieve(M, L_max);
            for (u64 j = 0; j < L_list.size(); ++j) {
                const u64 L = L_list[j];
                PointConfiguration config;
                config.origin = static_cast<i64>(M) + 1;
                config.length = L;
                config.kind = PointKind::Primes;
                for (u64 p : all.primes) {
                    if (p > M + L) break;
                    config.occupied.push_back(p - M - 1);
                }
                double tau = config.occupied.empty()
                                 ? 0.0
                                 : tau_discrete(config).tau;
                map.ln_tau[i * L_list.size() + j] =
                    tau > 0.0 ? std::log(tau)
                              : -std::numeric_limits<double>::infinity();
            }
        },
        threads);
    return map;
}

CdfCurve sk_cdf(const Spectrum& spectrum, const std::vector<double>& t_grid) {
    const u64 L = spectrum.grid_size;
    const u64 half = spectrum.half_count();  // grid points with k in (0, pi]
    if (half < 2) throw std::domain_error("sk_cdf: grid too small");
    std::vector<double> values;
    values.reserve(half);
    for (u64 j = 1; j <= half; ++j) values.push_back(spectrum.S(j));
    const double s_first = values.front();  // S at k = 2 pi / L
    std::sort(values.begin(), values.end());

    CdfCurve curve;
    for (double t : t_grid) {
        // values with S > t
        auto it = std::upper_bound(values.begin(), values.end(), t);
        u64 count = static_cast<u64>(values.end() - it);
        double lam = static_cast<double>(count) / static_cast<double>(half);
        double lam_minus = lam;
        if (s_first > t)
            lam_minus -= 1.0 / static_cast<double>(half);
        curve.t.push_back(t);
        curve.lambda.push_back(lam);
        curve.lambda_minus.push_back(lam_minus);
    }
    return curve;
}

GallagherHistogram gallagher_histogram(u64 X, double lambda, u64 samples,
                                       u64 seed, unsigned threads) {
    if (samples == 0)
        throw std::domain_error("gallagher_histogram: samples must be >= 1");
    GallagherHistogram out;
    out.X = X;
    out.lambda = lambda;
    out.samples = samples;
    out.window = lambda * std::log(static_cast<double>(X));
    if (out.window < 1.0)
        throw std::domain_error("gallagher_histogram: lambda ln X must be >= 1");
    const u64 win = static_cast<u64>(std::floor(out.window));

    PrimeInterval all = segmented_sieve(1, X + win + 1);
    const std::vector<u64>& prs = all.primes;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(2, X);
    std::vector<u64> starts(samples);
    for (u64 s = 0; s < samples; ++s) starts[s] = dist(rng);

    std::vector<u32> counts(samples);
    parallel_for(
        samples,
        [&](u64 s) {
            u64 M = starts[s];
            auto lo = std::upper_bound(prs.begin(), prs.end(), M);
            auto hi = std::upper_bound(prs.begin(), prs.end(), M + win);
            counts[s] = static_cast<u32>(hi - lo);
        },
        threads);

    u32 max_count = 0;
    for (u32 c : counts) max_count = std::max(max_count, c);
    out.freq.assign(max_count + 1, 0);
    long double total = 0.0L;
    for (u32 c : counts) {
        ++out.freq[c];
        total += c;
    }
    out.mean = static_cast<double>(total / static_cast<long double>(samples));

    out.empirical.resize(out.freq.size());
    out.poisson.resize(out.freq.size());
    double pmf = std::exp(-lambda);
    long double tv = 0.0L, poisson_mass = 0.0L;
    for (u64 k = 0; k < out.freq.size(); ++k) {
        out.empirical[k] =
            static_cast<double>(out.freq[k]) / static_cast<double>(samples);
        out.poisson[k] = pmf;
        poisson_mass += pmf;
        tv += std::abs(out.empirical[k] - out.poisson[k]);
        pmf *= lambda / static_cast<double>(k + 1);
    }
    tv += (1.0L - poisson_mass);  // Poisson tail beyond the observed support
    out.tv_distance = static_cast<double>(tv / 2.0L);
    return out;
}

}  // namespace pointspec
