#pragma once

// Spectral reconstruction of primes in an interval: synthesize eta(k) from
// the limit-periodic peak model, inverse-transform, rank sites by predicted
// density, and score the prediction against a sieve.

#include <complex>
#include <cstdint>
#include <vector>

#include "pointspec/numtheory.hpp"

namespace pointspec {

/// Rounded prime-number-theorem estimate (M+L)/ln(M+L) - M/ln(M).
u64 estimate_count(u64 M, u64 L);

struct PeakLedgerEntry {
    u64 n = 0;
    u64 m = 0;
    std::complex<double> C1;  // per-period contribution to eta
    bool on_grid = false;     // 2n | L: peak sits exactly on a grid point
    u32 grid_points = 0;      // grid points that received weight
};

/// Synthesized collective density variable on the grid k_j = 2 pi j / L.
/// Conjugate symmetry is enforced by construction (bins 0..L/2 stored),
/// so the inverse transform is real. Bin values are stored in the frame of
/// the window (site s = 0 is the absolute position M+1).
struct SynthesizedField {
    u64 M = 0;
    u64 L = 0;
    u64 n_max = 0;
    u64 N_target = 0;    // eta(0)
    double threshold = 0.0;
    std::vector<std::complex<double>> field_half;
    std::vector<PeakLedgerEntry> ledger;
};

/// Steps 1-7: place every peak k = m pi / n (n odd square-free <= n_max,
/// gcd(m, n) = 1) with amplitude N c_{2n}(m) / phi(2n), either exactly on
/// its grid point when 2n | L or spread over adjacent grid points by the
/// geometric-series window factor, keeping points with |contribution| above
/// `threshold` (default sqrt(N)).
SynthesizedField synthesize_field(u64 M, u64 L, u64 n_max,
                                  double threshold = -1.0);

/// Step 8: inverse transform; predicted site density eta(r) for
/// r = M+1 .. M+L (index 0 is M+1).
std::vector<double> inverse_density(const SynthesizedField& field);

struct FalsePositive {
    u64 value = 0;
    std::vector<u64> factors;  // prime factorization, ascending, with multiplicity
};

struct ReconstructionReport {
    u64 M = 0, L = 0, n_max = 0;
    u64 N_predicted = 0;
    u64 N_correct = 0;     // N_c
    u64 N_incorrect = 0;   // N_i
    u64 N_unpredicted = 0; // N_u
    double t1 = 0.0;       // N_c / N_i
    double t2 = 0.0;       // N_c / N_u
    std::vector<FalsePositive> false_positives;
};

/// Full pipeline: synthesize, invert, take the N_target sites with the
/// largest predicted density (ties to the smaller position), score against
/// the sieve, and factor the false positives.
ReconstructionReport reconstruct_primes(u64 M, u64 L, u64 n_max,
                                        double threshold = -1.0);

/// Reports for a list of n_max values (accuracy-versus-n_max curves).
std::vector<ReconstructionReport> accuracy_curve(u64 M, u64 L,
                                                 const std::vector<u64>& n_max_list);

}  // namespace pointspec
