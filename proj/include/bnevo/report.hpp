#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "bnevo/analysis.hpp"
#include "bnevo/stats.hpp"

namespace bnevo {

inline constexpr const char* kComparisonCsvHeader =
    "metric,class_a,class_b,n_a,n_b,u_a,u_b,p_value,mean_a,mean_b";

struct MetricComparison {
    std::string metric;
    std::string class_a, class_b;
    int n_a = 0, n_b = 0;
    double u_a = 0.0, u_b = 0.0;
    double p_value = 1.0;
    double mean_a = 0.0, mean_b = 0.0;
};

namespace detail {

inline const std::vector<std::pair<std::string, double AnalysisRow::*>>&
metric_fields() {
    static const std::vector<std::pair<std::string, double AnalysisRow::*>> m = {
        {"omega_bits", &AnalysisRow::omega_bits},
        {"tse_bits", &AnalysisRow::tse_bits},
        {"joint_entropy_bits", &AnalysisRow::joint_entropy_bits},
        {"mean_transient", &AnalysisRow::mean_transient},
        {"derrida", &AnalysisRow::derrida},
        {"phi_wms_bits", &AnalysisRow::phi_wms_bits},
        {"phi_r_bits", &AnalysisRow::phi_r_bits},
    };
    return m;
}

}  // namespace detail

// Values per (metric, class); attractor_count joins the double-typed metrics.
inline std::map<std::string, std::map<std::string, std::vector<double>>>
metric_values_by_class(const std::vector<AnalysisRow>& rows) {
    std::map<std::string, std::map<std::string, std::vector<double>>> out;
    for (const AnalysisRow& r : rows) {
        for (const auto& [name, field] : detail::metric_fields())
            out[name][r.class_label].push_back(r.*field);
        out["attractor_count"][r.class_label].push_back(double(r.attractor_count));
    }
    return out;
}

// Mann-Whitney U (both directions) for every metric and unordered class pair.
inline std::vector<MetricComparison> compare_classes(
    const std::vector<AnalysisRow>& rows) {
    std::vector<MetricComparison> out;
    const auto grouped = metric_values_by_class(rows);
    for (const auto& [metric, by_class] : grouped) {
        for (auto ia = by_class.begin(); ia != by_class.end(); ++ia) {
            for (auto ib = std::next(ia); ib != by_class.end(); ++ib) {
                MetricComparison c;
                c.metric = metric;
                c.class_a = ia->first;
                c.class_b = ib->first;
                c.n_a = int(ia->second.size());
                c.n_b = int(ib->second.size());
                const MannWhitneyResult fwd = mann_whitney_u(ia->second, ib->second);
                const MannWhitneyResult rev = mann_whitney_u(ib->second, ia->second);
                c.u_a = fwd.u;
                c.u_b = rev.u;
                c.p_value = fwd.p_two_sided;
                c.mean_a = summarize(ia->second).mean;
                c.mean_b = summarize(ib->second).mean;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

inline void write_comparison_csv(std::ostream& out,
                                 const std::vector<MetricComparison>& comps) {
    out << kComparisonCsvHeader << "\n";
    for (const MetricComparison& c : comps) {
        out << c.metric << ',' << c.class_a << ',' << c.class_b << ',' << c.n_a
            << ',' << c.n_b << ',' << detail::format_double(c.u_a) << ','
            << detail::format_double(c.u_b) << ','
            << detail::format_double(c.p_value) << ','
            << detail::format_double(c.mean_a) << ','
            << detail::format_double(c.mean_b) << "\n";
    }
}

}  // namespace bnevo
