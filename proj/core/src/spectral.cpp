#include "pointspec/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace pointspec {

namespace {

constexpr double kPi = std::numbers::pi;

// FFTW plan creation is not thread-safe; execution of ready plans is.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

double Spectrum::k(u64 j) const {
    return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid_size);
}

std::complex<double> Spectrum::eta(u64 j) const {
    j %= grid_size;
    if (j < eta_half.size()) return eta_half[j];
    return std::conj(eta_half[grid_size - j]);
}

double Spectrum::S(u64 j) const {
    return std::norm(eta(j)) / static_cast<double>(points);
}

double Spectrum::parseval_sum() const {
    long double acc = 0.0L;
    const u64 L = grid_size;
    const bool even = (L % 2 == 0);
    const u64 last = eta_half.size() - 1;
    for (u64 j = 0; j < eta_half.size(); ++j) {
        long double term = std::norm(eta_half[j]);
        bool self_paired = (j == 0) || (even && j == last);
        acc += self_paired ? term : 2.0L * term;
    }
    return static_cast<double>(acc);
}

double Spectrum::grid_mean_S() const {
    return parseval_sum() /
           (static_cast<double>(points) * static_cast<double>(grid_size));
}

double Spectrum::mean_S_no_forward() const {
    double total = parseval_sum() / static_cast<double>(points);
    return (total - S(0)) / static_cast<double>(grid_size - 1);
}

Spectrum density_variable(const PointConfiguration& config) {
    if (config.occupied.empty())
        throw std::domain_error("density_variable: empty configuration");
    const u64 L = config.length;
    if (L == 0) throw std::domain_error("density_variable: zero-length lattice");

    std::vector<double> occupancy(L, 0.0);
    for (u64 pos : config.occupied) occupancy[pos] = 1.0;

    Spectrum spec;
    spec.grid_size = L;
    spec.points = config.occupied.size();
    spec.eta_half.resize(L / 2 + 1);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        plan = fftw_plan_dft_r2c_1d(
            static_cast<int>(L), occupancy.data(),
            reinterpret_cast<fftw_complex*>(spec.eta_half.data()),
            FFTW_ESTIMATE);
    }
    if (!plan) throw std::runtime_error("density_variable: FFT plan failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return spec;
}

Spectrum structure_factor(const PointConfiguration& config) {
    return density_variable(config);
}

double structure_factor_at(const PointConfiguration& config, double k) {
    double re = 0.0, im = 0.0;
    for (u64 pos : config.occupied) {
        double phase = -k * static_cast<double>(pos);
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return (re * re + im * im) / static_cast<double>(config.occupied.size());
}

double cumulative_intensity(const Spectrum& spectrum, double K) {
    if (!(K > 0.0) || K > kPi + 1e-12)
        throw std::domain_error("cumulative_intensity: K must be in (0, pi]");
    const u64 L = spectrum.grid_size;
    const double dk = 2.0 * kPi / static_cast<double>(L);
    u64 j_max = static_cast<u64>(std::floor(K / dk + 1e-9));
    if (j_max > L / 2) j_max = L / 2;
    long double acc = 0.0L;
    for (u64 j = 1; j <= j_max; ++j) acc += spectrum.S(j);
    return static_cast<double>(2.0L * acc * dk);
}

PairCorrelation pair_correlation(const PointConfiguration& config, u64 r_max,
                                 bool periodic) {
    const u64 L = config.length;
    if (r_max >= L)
        throw std::domain_error("pair_correlation: r_max must be < length");
    std::vector<char> occ(L, 0);
    for (u64 pos : config.occupied) occ[pos] = 1;

    PairCorrelation pc;
    pc.periodic = periodic;
    pc.f = 2.0 * static_cast<double>(config.occupied.size()) /
           static_cast<double>(L);
    const double norm = 2.0 / (pc.f * pc.f * static_cast<double>(L));
    for (u64 r = 2; r <= r_max; r += 2) {
        u64 pairs = 0;
        if (periodic) {
            for (u64 pos : config.occupied)
                if (occ[(pos + r) % L]) ++pairs;
        } else {
            for (u64 pos : config.occupied)
                if (pos + r < L && occ[pos + r]) ++pairs;
        }
        pc.rgrid.push_back(r);
        pc.pair_counts.push_back(pairs);
        pc.g2.push_back(norm * static_cast<double>(pairs));
    }
    return pc;
}

}  // namespace pointspec
