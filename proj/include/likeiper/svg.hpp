#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace likeiper {

/// A discrete sequence rendered as a step function: value[i] belongs to
/// n = first_n + i and is drawn constant over the interval (n, n+1).
struct StepSeries {
    std::string label;
    std::string color;
    int first_n = 1;
    std::vector<double> values;
};

namespace detail {

inline std::string svg_num(double v) {
    std::ostringstream os;
    os << std::setprecision(8) << v;
    return os.str();
}

/// Pick a tick spacing of the form {1,2,5}*10^k covering roughly `target`
/// intervals over `span`.
inline double nice_step(double span, int target) {
    if (span <= 0)
        return 1.0;
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw)
            return mag * mult;
    }
    return mag * 10.0;
}

}  // namespace detail

/// Piecewise-constant plot of one or more sequences over [n_min, n_max+1],
/// with annotated axes. Plain SVG 1.1, no styling beyond stroke colors.
inline void write_step_svg(std::ostream& out, const std::vector<StepSeries>& series, int n_min,
                           int n_max, const std::string& title = {}) {
    const double width = 880, height = 560;
    const double ml = 70, mr = 160, mt = 40, mb = 50;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    double y_lo = 0, y_hi = 1;
    bool have_value = false;
    for (const auto& s : series) {
        for (int n = n_min; n <= n_max; ++n) {
            const int i = n - s.first_n;
            if (i < 0 || i >= static_cast<int>(s.values.size()))
                continue;
            const double v = s.values[static_cast<std::size_t>(i)];
            if (!have_value) {
                y_lo = y_hi = v;
                have_value = true;
            }
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    if (!have_value) {
        y_lo = 0;
        y_hi = 1;
    }
    if (y_hi == y_lo) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double pad = 0.06 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const double x_lo = n_min, x_hi = n_max + 1;
    const auto X = [&](double n) { return ml + (n - x_lo) / (x_hi - x_lo) * plot_w; };
    const auto Y = [&](double v) { return mt + (y_hi - v) / (y_hi - y_lo) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"16\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w << "\" y2=\""
        << mt + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + plot_h
        << "\" stroke=\"black\"/>\n";

    // x ticks at integers (thinned when the range is wide)
    const int x_tick_step = std::max(1, (n_max - n_min) / 16);
    for (int n = n_min; n <= n_max + 1; n += x_tick_step) {
        const double x = X(n);
        out << "<line x1=\"" << x << "\" y1=\"" << mt + plot_h << "\" x2=\"" << x << "\" y2=\""
            << mt + plot_h + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << mt + plot_h + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << n
            << "</text>\n";
    }
    out << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">n</text>\n";

    // y ticks
    const double y_step = detail::nice_step(y_hi - y_lo, 6);
    for (double v = std::ceil(y_lo / y_step) * y_step; v <= y_hi + 1e-12; v += y_step) {
        const double y = Y(v);
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << y << "\" x2=\"" << ml << "\" y2=\"" << y
            << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << ml + plot_w << "\" y2=\"" << y
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << ml - 9 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::svg_num(std::abs(v) < y_step * 1e-9 ? 0.0 : v) << "</text>\n";
    }

    // series as step polylines
    int legend_row = 0;
    for (const auto& s : series) {
        std::ostringstream pts;
        bool started = false;
        for (int n = n_min; n <= n_max; ++n) {
            const int i = n - s.first_n;
            if (i < 0 || i >= static_cast<int>(s.values.size()))
                continue;
            const double v = s.values[static_cast<std::size_t>(i)];
            if (!started) {
                pts << detail::svg_num(X(n)) << "," << detail::svg_num(Y(v)) << " ";
                started = true;
            } else {
                pts << detail::svg_num(X(n)) << "," << detail::svg_num(Y(v)) << " ";
            }
            pts << detail::svg_num(X(n + 1)) << "," << detail::svg_num(Y(v)) << " ";
        }
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\" points=\""
            << pts.str() << "\"/>\n";
        const double ly = mt + 16 + 18 * legend_row++;
        out << "<line x1=\"" << ml + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << ml + plot_w + 36 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + plot_w + 42 << "\" y=\"" << ly
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace likeiper
