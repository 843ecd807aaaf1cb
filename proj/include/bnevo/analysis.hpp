#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnevo/core.hpp"
#include "bnevo/dynamics.hpp"
#include "bnevo/info.hpp"
#include "bnevo/phi.hpp"
#include "bnevo/rng.hpp"

namespace bnevo {

inline constexpr const char* kAnalysisCsvHeader =
    "network_id,class,omega_bits,tse_bits,joint_entropy_bits,attractor_count,"
    "mean_transient,derrida,phi_wms_bits,phi_r_bits,tse_seed,derrida_seed,"
    "phi_noise_seed";

struct AnalysisSettings {
    std::uint64_t master_seed = 0;
    int tse_subset_cap = 75;
    int derrida_samples_per_m = 2000;
};

// One report row per network. Per-row seeds are derived from the master seed
// and the network id alone, so re-analyzing the same genomes reproduces the
// same rows.
struct AnalysisRow {
    std::string network_id;
    std::string class_label;  // random | redundant | synergistic | complex
    double omega_bits = 0.0;
    double tse_bits = 0.0;
    double joint_entropy_bits = 0.0;
    int attractor_count = 0;
    double mean_transient = 0.0;
    double derrida = 0.0;
    double phi_wms_bits = 0.0;
    double phi_r_bits = 0.0;
    std::uint64_t tse_seed = 0;
    std::uint64_t derrida_seed = 0;
    std::uint64_t phi_noise_seed = 0;
};

inline AnalysisRow analyze_network(const BooleanNetwork& net,
                                   const std::string& network_id,
                                   const std::string& class_label,
                                   const AnalysisSettings& settings) {
    AnalysisRow row;
    row.network_id = network_id;
    row.class_label = class_label;
    const std::uint64_t id_hash = fnv1a64(network_id);
    row.tse_seed = derive_seed(settings.master_seed, 0x747365ull, id_hash);
    row.derrida_seed = derive_seed(settings.master_seed, 0x646572ull, id_hash);
    row.phi_noise_seed = derive_seed(settings.master_seed, 0x706869ull, id_hash);

    const TransitionMap tm = transition_map(net);
    const CountDistribution dist = intervention_distribution(tm);
    row.omega_bits = o_information(dist);
    row.tse_bits =
        tse_complexity(dist, settings.tse_subset_cap, make_rng(row.tse_seed));
    row.joint_entropy_bits = marginal_entropy(dist, NodeSubset::full(net.num_nodes));

    const AttractorReport attr = find_attractors(tm);
    row.attractor_count = attr.attractor_count;
    row.mean_transient = attr.mean_transient;
    row.derrida = derrida_coefficient(net, settings.derrida_samples_per_m,
                                      make_rng(row.derrida_seed));

    const IntegratedInformation ii =
        integrated_information(tm, row.phi_noise_seed);
    row.phi_wms_bits = ii.phi_wms_bits;
    row.phi_r_bits = ii.phi_r_bits;
    return row;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

inline void write_analysis_csv(std::ostream& out,
                               const std::vector<AnalysisRow>& rows) {
    out << kAnalysisCsvHeader << "\n";
    for (const AnalysisRow& r : rows) {
        out << r.network_id << ',' << r.class_label << ','
            << detail::format_double(r.omega_bits) << ','
            << detail::format_double(r.tse_bits) << ','
            << detail::format_double(r.joint_entropy_bits) << ','
            << r.attractor_count << ','
            << detail::format_double(r.mean_transient) << ','
            << detail::format_double(r.derrida) << ','
            << detail::format_double(r.phi_wms_bits) << ','
            << detail::format_double(r.phi_r_bits) << ',' << r.tse_seed << ','
            << r.derrida_seed << ',' << r.phi_noise_seed << "\n";
    }
}

class CsvFormatError : public std::runtime_error {
  public:
    explicit CsvFormatError(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<AnalysisRow> read_analysis_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw CsvFormatError("empty analysis CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kAnalysisCsvHeader)
        throw CsvFormatError("analysis CSV header mismatch: got \"" + line + "\"");
    std::vector<AnalysisRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 13)
            throw CsvFormatError("line " + std::to_string(line_no) + ": expected " +
                                 "13 fields, got " + std::to_string(f.size()));
        AnalysisRow r;
        try {
            r.network_id = f[0];
            r.class_label = f[1];
            r.omega_bits = std::stod(f[2]);
            r.tse_bits = std::stod(f[3]);
            r.joint_entropy_bits = std::stod(f[4]);
            r.attractor_count = std::stoi(f[5]);
            r.mean_transient = std::stod(f[6]);
            r.derrida = std::stod(f[7]);
            r.phi_wms_bits = std::stod(f[8]);
            r.phi_r_bits = std::stod(f[9]);
            r.tse_seed = std::stoull(f[10]);
            r.derrida_seed = std::stoull(f[11]);
            r.phi_noise_seed = std::stoull(f[12]);
        } catch (const std::exception&) {
            throw CsvFormatError("line " + std::to_string(line_no) +
                                 ": unparseable numeric field");
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace bnevo
