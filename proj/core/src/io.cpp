#include "pointspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pointspec {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

void put_header(std::ofstream& out, const std::vector<std::string>& header) {
    for (const auto& line : header) {
        if (!line.empty() && line.front() == '#')
            out << line << '\n';
        else
            out << "# " << line << '\n';
    }
}

}  // namespace

std::vector<std::string> run_header(
    const std::string& subcommand,
    const std::vector<std::pair<std::string, std::string>>& params) {
    std::vector<std::string> lines;
    lines.push_back("# pointspec " + subcommand);
    lines.push_back(std::string("# version=") + kVersion);
    for (const auto& [key, value] : params)
        lines.push_back("# " + key + "=" + value);
    return lines;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_positions(const std::string& path, const PointConfiguration& config,
                     const std::vector<std::string>& header) {
    auto out = open_out(path);
    put_header(out, header);
    out << "# origin=" << config.origin << " length=" << config.length
        << " spacing=" << config.spacing << " kind=" << to_string(config.kind)
        << '\n';
    for (u64 pos : config.occupied)
        out << (config.origin + static_cast<i64>(pos)) << '\n';
}

PointConfiguration read_positions(const std::string& path) {
    auto in = open_in(path);
    PointConfiguration config;
    bool have_meta = false;
    std::string line;
    std::vector<i64> absolutes;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t pos = line.find("origin=");
            if (pos != std::string::npos) {
                std::istringstream meta(line.substr(1));
                std::string token;
                while (meta >> token) {
                    auto eq = token.find('=');
                    if (eq == std::string::npos) continue;
                    std::string key = token.substr(0, eq);
                    std::string value = token.substr(eq + 1);
                    if (key == "origin") config.origin = std::stoll(value);
                    else if (key == "length") config.length = std::stoull(value);
                    else if (key == "spacing") config.spacing = std::stoull(value);
                    else if (key == "kind") config.kind = point_kind_from_string(value);
                }
                have_meta = true;
            }
            continue;
        }
        absolutes.push_back(std::stoll(line));
    }
    if (!have_meta) {
        config.origin = absolutes.empty() ? 0 : absolutes.front();
        config.length = absolutes.empty()
                            ? 0
                            : static_cast<u64>(absolutes.back() - config.origin) + 1;
        config.kind = PointKind::Custom;
    }
    for (i64 abs : absolutes)
        config.occupied.push_back(static_cast<u64>(abs - config.origin));
    config.validate();
    return config;
}

void write_rle(const std::string& path, const PointConfiguration& config,
               const std::vector<std::string>& header) {
    auto out = open_out(path);
    put_header(out, header);
    out << "# pointspec-rle v1\n";
    out << config.origin << ' ' << config.length << ' ' << config.spacing
        << ' ' << to_string(config.kind) << '\n';
    // Alternating run lengths, first run unoccupied.
    std::vector<u64> runs;
    u64 cursor = 0;
    std::size_t i = 0;
    while (i < config.occupied.size()) {
        u64 start = config.occupied[i];
        runs.push_back(start - cursor);
        u64 len = 1;
        while (i + len < config.occupied.size() &&
               config.occupied[i + len] == start + len)
            ++len;
        runs.push_back(len);
        cursor = start + len;
        i += len;
    }
    if (cursor < config.length) runs.push_back(config.length - cursor);
    for (std::size_t r = 0; r < runs.size(); ++r)
        out << runs[r] << (r + 1 < runs.size() ? ' ' : '\n');
    if (runs.empty()) out << '\n';
}

PointConfiguration read_rle(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    PointConfiguration config;
    bool meta_done = false;
    std::vector<u64> runs;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::istringstream ss(line);
        if (!meta_done) {
            std::string kind;
            ss >> config.origin >> config.length >> config.spacing >> kind;
            config.kind = point_kind_from_string(kind);
            meta_done = true;
            continue;
        }
        u64 v;
        while (ss >> v) runs.push_back(v);
    }
    u64 cursor = 0;
    bool occupied_run = false;
    for (u64 run : runs) {
        if (occupied_run)
            for (u64 i = 0; i < run; ++i) config.occupied.push_back(cursor + i);
        cursor += run;
        occupied_run = !occupied_run;
    }
    config.validate();
    return config;
}

void write_spectrum_csv(const std::string& path, const Spectrum& spectrum,
                        const std::vector<std::string>& header) {
    auto out = open_out(path);
    put_header(out, header);
    out << "# grid_size=" << spectrum.grid_size << " points=" << spectrum.points
        << '\n';
    out << "k,re_eta,im_eta,S\n";
    for (u64 j = 0; j < spectrum.eta_half.size(); ++j) {
        out << format_full(spectrum.k(j)) << ','
            << format_full(spectrum.eta_half[j].real()) << ','
            << format_full(spectrum.eta_half[j].imag()) << ','
            << format_full(spectrum.S(j)) << '\n';
    }
}

namespace {
constexpr char kSpectrumMagic[8] = {'P', 'S', 'P', 'C', 'S', 'P', 'K', '1'};
}

void write_spectrum_binary(const std::string& path, const Spectrum& spectrum) {
    auto out = open_out(path);
    out.write(kSpectrumMagic, sizeof(kSpectrumMagic));
    u64 meta[3] = {spectrum.grid_size, spectrum.points,
                   static_cast<u64>(spectrum.forward_included)};
    out.write(reinterpret_cast<const char*>(meta), sizeof(meta));
    out.write(reinterpret_cast<const char*>(spectrum.eta_half.data()),
              static_cast<std::streamsize>(spectrum.eta_half.size() *
                                           sizeof(std::complex<double>)));
}

Spectrum read_spectrum_binary(const std::string& path) {
    auto in = open_in(path);
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::string(magic, 8) != std::string(kSpectrumMagic, 8))
        throw std::runtime_error("not a pointspec spectrum file: " + path);
    u64 meta[3];
    in.read(reinterpret_cast<char*>(meta), sizeof(meta));
    Spectrum spec;
    spec.grid_size = meta[0];
    spec.points = meta[1];
    spec.forward_included = (meta[2] != 0);
    spec.eta_half.resize(spec.grid_size / 2 + 1);
    in.read(reinterpret_cast<char*>(spec.eta_half.data()),
            static_cast<std::streamsize>(spec.eta_half.size() *
                                         sizeof(std::complex<double>)));
    if (!in) throw std::runtime_error("truncated spectrum file: " + path);
    return spec;
}

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows) {
    auto out = open_out(path);
    put_header(out, header);
    for (std::size_t c = 0; c < columns.size(); ++c)
        out << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << format_full(row[c]) << (c + 1 < row.size() ? ',' : '\n');
    }
}

std::string reconstruction_to_json(const ReconstructionReport& report) {
    nlohmann::json j;
    j["M"] = report.M;
    j["L"] = report.L;
    j["n_max"] = report.n_max;
    j["N_predicted"] = report.N_predicted;
    j["N_correct"] = report.N_correct;
    j["N_incorrect"] = report.N_incorrect;
    j["N_unpredicted"] = report.N_unpredicted;
    if (std::isfinite(report.t1)) j["t1"] = report.t1; else j["t1"] = nullptr;
    if (std::isfinite(report.t2)) j["t2"] = report.t2; else j["t2"] = nullptr;
    j["precision"] =
        report.N_predicted
            ? static_cast<double>(report.N_correct) / report.N_predicted
            : 0.0;
    nlohmann::json fps = nlohmann::json::array();
    for (const auto& fp : report.false_positives) {
        nlohmann::json item;
        item["value"] = fp.value;
        item["factors"] = fp.factors;
        fps.push_back(item);
    }
    j["false_positives"] = fps;
    return j.dump(2);
}

void write_reconstruction_json(const std::string& path,
                               const ReconstructionReport& report,
                               const std::vector<std::string>& header) {
    auto out = open_out(path);
    // JSON cannot carry comment lines; provenance goes into the object.
    nlohmann::json j = nlohmann::json::parse(reconstruction_to_json(report));
    for (const auto& line : header) {
        j["provenance"].push_back(line);
    }
    out << j.dump(2) << '\n';
}

}  // namespace pointspec
