#pragma once

// Empirical spectral quantities of a configuration: the complex collective
// density variable, scattering intensity S(k), cumulative intensity Z(K),
// and the pair correlation function.

#include <complex>
#include <cstdint>
#include <vector>

#include "pointspec/config.hpp"

namespace pointspec {

/// Sampled spectrum on the uniform grid k_j = 2*pi*j/L of the configuration
/// lattice. Real input gives conjugate symmetry, so bins j = 0..L/2 are
/// stored and the rest are exposed through the accessors.
struct Spectrum {
    u64 grid_size = 0;  // L, number of lattice sites (and grid points)
    u64 points = 0;     // N, number of occupied sites
    bool forward_included = true;
    std::vector<std::complex<double>> eta_half;

    double k(u64 j) const;
    std::complex<double> eta(u64 j) const;
    double S(u64 j) const;

    /// Number of grid points with k in (0, pi].
    u64 half_count() const { return grid_size / 2; }

    /// Sum over the full grid of |eta|^2 (discrete Parseval: equals L*N).
    double parseval_sum() const;
    /// Mean of S over the full grid including k = 0.
    double grid_mean_S() const;
    /// Mean of S over k != 0.
    double mean_S_no_forward() const;
};

/// eta(k) = sum_j exp(-i k r_j) on the uniform grid, via an FFT of the 0/1
/// occupancy sequence. Positions are taken relative to the configuration
/// origin (a global phase; |eta| is origin-independent).
Spectrum density_variable(const PointConfiguration& config);

/// S(k) = |eta(k)|^2 / N on the uniform grid; S(0) = N is the forward peak.
Spectrum structure_factor(const PointConfiguration& config);

/// Direct O(N) evaluation of S at an arbitrary wavenumber, no grid snapping.
double structure_factor_at(const PointConfiguration& config, double k);

/// Z(K) = 2 * sum of S over grid points 0 < k_j <= K times the grid step.
/// Forward scattering excluded. Requires 0 < K <= pi.
double cumulative_intensity(const Spectrum& spectrum, double K);

struct PairCorrelation {
    std::vector<u64> rgrid;        // even separations 2, 4, ...
    std::vector<u64> pair_counts;  // ordered pairs at each separation
    std::vector<double> g2;
    double f = 0.0;  // occupation fraction used for normalization (2N/L)
    bool periodic = false;
};

/// Pair counts by occupancy lookup over even separations r <= r_max, with
/// g2(r) = 2 rho(r) / f^2, rho(r) = pairs/L, f = 2N/L. The normalization is
/// the odd-sublattice convention used for the primes and their comparison
/// gases. With periodic = true separations wrap modulo L.
PairCorrelation pair_correlation(const PointConfiguration& config, u64 r_max,
                                 bool periodic = false);

}  // namespace pointspec
