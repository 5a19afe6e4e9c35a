#pragma once

// File emitters and readers: position lists, run-length bitsets, spectrum
// CSV/binary, generic CSV tables, and the reconstruction report JSON.
// Every emitter starts the file with '#'-prefixed provenance lines so a run
// can be reproduced from its output alone.

#include <string>
#include <utility>
#include <vector>

#include "pointspec/config.hpp"
#include "pointspec/reconstruct.hpp"
#include "pointspec/spectral.hpp"

namespace pointspec {

inline constexpr const char* kVersion = "0.1.0";

/// '#'-prefixed provenance block recording the exact run configuration.
std::vector<std::string> run_header(
    const std::string& subcommand,
    const std::vector<std::pair<std::string, std::string>>& params);

/// Full-precision decimal form (17 significant digits).
std::string format_full(double v);

/// One absolute position per line.
void write_positions(const std::string& path, const PointConfiguration& config,
                     const std::vector<std::string>& header = {});
PointConfiguration read_positions(const std::string& path);

/// Run-length bitset: "origin length spacing kind" then alternating run
/// lengths starting with an unoccupied run.
void write_rle(const std::string& path, const PointConfiguration& config,
               const std::vector<std::string>& header = {});
PointConfiguration read_rle(const std::string& path);

/// Columns k, Re eta, Im eta, S over the stored half grid (j = 0..L/2).
void write_spectrum_csv(const std::string& path, const Spectrum& spectrum,
                        const std::vector<std::string>& header = {});

/// Binary column format for large grids; round-trips exactly.
void write_spectrum_binary(const std::string& path, const Spectrum& spectrum);
Spectrum read_spectrum_binary(const std::string& path);

/// Generic CSV: header block, one name per column, rows of doubles at full
/// precision.
void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows);

/// Counts, ratios, and factored false positives as JSON.
void write_reconstruction_json(const std::string& path,
                               const ReconstructionReport& report,
                               const std::vector<std::string>& header = {});
std::string reconstruction_to_json(const ReconstructionReport& report);

}  // namespace pointspec
