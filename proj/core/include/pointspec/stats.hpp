#pragma once

// Order and fluctuation statistics: number variance, the tau order metric,
// the value distribution lambda(t) of S(k), and the Gallagher interval-count
// histogram.

#include <cstdint>
#include <string>
#include <vector>

#include "pointspec/config.hpp"
#include "pointspec/spectral.hpp"

namespace pointspec {

struct VarianceCurve {
    std::vector<double> R;
    std::vector<double> sigma2;
    std::string estimator;  // "direct-window" or "fourier"
};

/// Variance of the point count over every window of 2R consecutive sites
/// fully inside the lattice (no periodic wrap). O(L) per R via prefix sums.
VarianceCurve number_variance_direct(const PointConfiguration& config,
                                     const std::vector<u64>& R_list);

/// Fourier-side estimator: sigma^2(R) = (rho R / pi) * sum over the grid
/// (k != 0, |k| <= pi) of S(k) * 2 sin^2(kR) / (R k^2) * dk.
VarianceCurve number_variance_fourier(const Spectrum& spectrum,
                                      const std::vector<double>& R_list);

struct TauResult {
    double tau = 0.0;
    double f = 0.0;   // occupation fraction on the analysis lattice
    u64 sites = 0;    // N_s
    u64 grid = 0;     // number of grid points summed (N_s - 1)
    PointKind kind = PointKind::Custom;

    /// Density and length in the raw-lattice convention (f = 2 rho,
    /// N_s = L/2) used when comparing against the primes.
    double rho() const { return f / 2.0; }
    u64 raw_length() const { return 2 * sites; }
};

/// Single-configuration tau: (1/N_s) * sum over the N_s-point grid
/// (excluding k = 0) of (S - (1-f))^2. Primes are first restricted to the
/// odd sublattice, so N_s = L/2 and f = 2 rho.
TauResult tau_discrete(const PointConfiguration& config);

struct TauPhaseMap {
    std::vector<u64> M_values;
    std::vector<u64> L_values;
    std::vector<double> ln_tau;  // row-major: [i_M * L_values.size() + i_L]
};

/// ln tau of the primes over an (M, L) grid.
TauPhaseMap tau_phase_map(const std::vector<u64>& M_list,
                          const std::vector<u64>& L_list, unsigned threads = 1);

struct CdfCurve {
    std::vector<double> t;
    std::vector<double> lambda;        // measure of {k in (0, pi] : S > t} / pi
    std::vector<double> lambda_minus;  // same with the k <= 2 pi/L band removed
};

/// Fraction of grid points in (0, pi] with S(k) > t, for each t.
CdfCurve sk_cdf(const Spectrum& spectrum, const std::vector<double>& t_grid);

struct GallagherHistogram {
    u64 X = 0;
    double lambda = 0.0;
    double window = 0.0;  // lambda * ln X
    u64 samples = 0;
    std::vector<u64> freq;          // freq[N] = intervals containing N primes
    std::vector<double> empirical;  // freq / samples
    std::vector<double> poisson;    // Poisson(lambda) pmf on the same support
    double mean = 0.0;
    double tv_distance = 0.0;  // total variation to Poisson(lambda)
};

/// Prime counts in `samples` random intervals (M, M + lambda ln X], M <= X,
/// against the Poisson(lambda) reference.
GallagherHistogram gallagher_histogram(u64 X, double lambda, u64 samples,
                                       u64 seed, unsigned threads = 1);

}  // namespace pointspec
