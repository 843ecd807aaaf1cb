#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace bnevo {

// Minimal self-contained SVG emitters for the report command. Output is
// deterministic: fixed canvas, fixed formatting, no timestamps.

namespace svg_detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline double quantile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0.0;
    const double pos = q * double(sorted.size() - 1);
    const std::size_t lo = std::size_t(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - double(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

inline const char* class_color(const std::string& label) {
    if (label == "redundant") return "#c0392b";
    if (label == "synergistic") return "#2d6fb4";
    if (label == "complex") return "#c8a028";
    return "#7f8c8d";  // random and anything else
}

}  // namespace svg_detail

struct BoxSeries {
    std::string label;
    std::vector<double> values;
};

inline std::string box_plot_svg(const std::string& title,
                                const std::vector<BoxSeries>& series) {
    const double width = 160.0 * double(std::max<std::size_t>(series.size(), 1)) + 80.0;
    const double height = 360.0;
    const double plot_top = 50.0, plot_bottom = height - 40.0;

    double lo = 0.0, hi = 1.0;
    bool first = true;
    for (const auto& s : series)
        for (double v : s.values) {
            if (first) {
                lo = hi = v;
                first = false;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.06 * (hi - lo);
    lo -= pad;
    hi += pad;
    const auto y_of = [&](double v) {
        return plot_bottom - (v - lo) / (hi - lo) * (plot_bottom - plot_top);
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(width)
       << "\" height=\"" << int(height) << "\" viewBox=\"0 0 " << int(width)
       << " " << int(height) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << svg_detail::num(width / 2)
       << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"16\">"
       << title << "</text>\n";
    // y axis with min/max labels
    os << "<line x1=\"50\" y1=\"" << svg_detail::num(plot_top) << "\" x2=\"50\" y2=\""
       << svg_detail::num(plot_bottom) << "\" stroke=\"#333\"/>\n";
    for (double q : {lo + pad, hi - pad}) {
        os << "<text x=\"46\" y=\"" << svg_detail::num(y_of(q) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << svg_detail::num(q) << "</text>\n";
    }

    double x = 90.0;
    for (const auto& s : series) {
        std::vector<double> sorted = s.values;
        std::sort(sorted.begin(), sorted.end());
        const double q1 = svg_detail::quantile(sorted, 0.25);
        const double q2 = svg_detail::quantile(sorted, 0.50);
        const double q3 = svg_detail::quantile(sorted, 0.75);
        const double w_lo = sorted.empty() ? 0.0 : sorted.front();
        const double w_hi = sorted.empty() ? 0.0 : sorted.back();
        const char* color = svg_detail::class_color(s.label);
        const double half = 34.0;

        os << "<line x1=\"" << svg_detail::num(x) << "\" y1=\""
           << svg_detail::num(y_of(w_lo)) << "\" x2=\"" << svg_detail::num(x)
           << "\" y2=\"" << svg_detail::num(y_of(w_hi)) << "\" stroke=\"" << color
           << "\"/>\n";
        for (double wv : {w_lo, w_hi})
            os << "<line x1=\"" << svg_detail::num(x - half / 2) << "\" y1=\""
               << svg_detail::num(y_of(wv)) << "\" x2=\""
               << svg_detail::num(x + half / 2) << "\" y2=\""
               << svg_detail::num(y_of(wv)) << "\" stroke=\"" << color << "\"/>\n";
        os << "<rect x=\"" << svg_detail::num(x - half) << "\" y=\""
           << svg_detail::num(y_of(q3)) << "\" width=\"" << svg_detail::num(2 * half)
           << "\" height=\"" << svg_detail::num(std::max(1.0, y_of(q1) - y_of(q3)))
           << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
           << "\"/>\n";
        os << "<line x1=\"" << svg_detail::num(x - half) << "\" y1=\""
           << svg_detail::num(y_of(q2)) << "\" x2=\"" << svg_detail::num(x + half)
           << "\" y2=\"" << svg_detail::num(y_of(q2)) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << svg_detail::num(x) << "\" y=\""
           << svg_detail::num(plot_bottom + 22)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"13\">"
           << s.label << "</text>\n";
        x += 160.0;
    }
    os << "</svg>\n";
    return os.str();
}

struct TrajectorySeries {
    std::string label;
    std::vector<double> values;  // one value per generation
};

inline std::string trajectory_svg(const std::string& title,
                                  const std::vector<TrajectorySeries>& series) {
    const double width = 640.0, height = 400.0;
    const double left = 60.0, right = width - 20.0;
    const double top = 50.0, bottom = height - 40.0;

    double lo = 0.0, hi = 1.0;
    std::size_t max_len = 1;
    bool first = true;
    for (const auto& s : series) {
        max_len = std::max(max_len, s.values.size());
        for (double v : s.values) {
            if (first) {
                lo = hi = v;
                first = false;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const auto x_of = [&](std::size_t g) {
        return left + double(g) / double(std::max<std::size_t>(max_len - 1, 1)) *
                          (right - left);
    };
    const auto y_of = [&](double v) {
        return bottom - (v - lo) / (hi - lo) * (bottom - top);
    };

    const char* palette[] = {"#c0392b", "#2d6fb4", "#c8a028", "#27ae60",
                             "#8e44ad", "#16a085", "#d35400", "#2c3e50"};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << int(width)
       << "\" height=\"" << int(height) << "\" viewBox=\"0 0 " << int(width)
       << " " << int(height) << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << svg_detail::num(width / 2)
       << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"16\">"
       << title << "</text>\n"
       << "<line x1=\"" << svg_detail::num(left) << "\" y1=\""
       << svg_detail::num(bottom) << "\" x2=\"" << svg_detail::num(right)
       << "\" y2=\"" << svg_detail::num(bottom) << "\" stroke=\"#333\"/>\n"
       << "<line x1=\"" << svg_detail::num(left) << "\" y1=\""
       << svg_detail::num(top) << "\" x2=\"" << svg_detail::num(left) << "\" y2=\""
       << svg_detail::num(bottom) << "\" stroke=\"#333\"/>\n";

    int color_idx = 0;
    double legend_y = top;
    for (const auto& s : series) {
        const char* color = palette[color_idx % 8];
        ++color_idx;
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t g = 0; g < s.values.size(); ++g) {
            if (g) os << ' ';
            os << svg_detail::num(x_of(g)) << ',' << svg_detail::num(y_of(s.values[g]));
        }
        os << "\"/>\n";
        os << "<text x=\"" << svg_detail::num(right - 4) << "\" y=\""
           << svg_detail::num(legend_y) << "\" text-anchor=\"end\" fill=\"" << color
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
           << "</text>\n";
        legend_y += 14.0;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace bnevo
