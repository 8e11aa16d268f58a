#include "zopf/svg.hpp"

#include "zopf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace zopf {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMarginL = 80.0;
constexpr double kMarginR = 170.0; // room for the legend
constexpr double kMarginT = 40.0;
constexpr double kMarginB = 60.0;
constexpr double kLogClamp = 1e-16;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double x_of(const TraceRow& r, PlotAxis axis) {
    return axis == PlotAxis::vs_evaluations ? static_cast<double>(r.evaluations)
                                            : static_cast<double>(r.k);
}

} // namespace

void emit_plot(const std::vector<RunTrace>& traces, const PlotSpec& spec, std::ostream& out) {
    if (traces.empty())
        throw std::invalid_argument("emit_plot: need at least one trace");
    for (const RunTrace& t : traces)
        if (t.rows.empty())
            throw std::invalid_argument("emit_plot: empty trace '" + t.label + "'");

    bool clamped = false;
    auto y_val = [&](double gap) {
        if (spec.log_y && gap < kLogClamp) {
            clamped = true;
            return kLogClamp;
        }
        return gap;
    };

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const RunTrace& t : traces) {
        for (const TraceRow& r : t.rows) {
            const double x = x_of(r, spec.axis);
            const double y = y_val(r.gap);
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (clamped)
        std::cerr << "emit_plot: warning: non-positive gap clamped to " << kLogClamp
                  << " on the log axis\n";
    if (xmax <= xmin)
        xmax = xmin + 1.0;
    if (spec.log_y) {
        if (ymax <= ymin)
            ymax = ymin * 10.0;
    } else if (ymax <= ymin) {
        ymax = ymin + 1.0;
    }

    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    auto sx = [&](double x) { return kMarginL + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) {
        double t = spec.log_y ? (std::log10(y) - std::log10(ymin)) /
                                    (std::log10(ymax) - std::log10(ymin))
                              : (y - ymin) / (ymax - ymin);
        return kMarginT + (1.0 - t) * plot_h;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
           "font-family=\"sans-serif\" font-size=\"13\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!spec.title.empty())
        out << "<text x=\"" << num(kMarginL + plot_w / 2) << "\" y=\"24\" "
            << "text-anchor=\"middle\" font-size=\"16\">" << spec.title << "</text>\n";

    // frame
    out << "<rect x=\"" << num(kMarginL) << "\" y=\"" << num(kMarginT) << "\" width=\""
        << num(plot_w) << "\" height=\"" << num(plot_h)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks
    for (int i = 0; i <= 5; ++i) {
        const double x = xmin + (xmax - xmin) * i / 5.0;
        const double px = sx(x);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kMarginT + plot_h) << "\" x2=\""
            << num(px) << "\" y2=\"" << num(kMarginT + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(px) << "\" y=\"" << num(kMarginT + plot_h + 20)
            << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    out << "<text x=\"" << num(kMarginL + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">"
        << (spec.axis == PlotAxis::vs_evaluations ? "oracle evaluations" : "iteration k")
        << "</text>\n";

    // y ticks
    const int yticks = 5;
    for (int i = 0; i <= yticks; ++i) {
        double y;
        if (spec.log_y) {
            const double lg =
                std::log10(ymin) + (std::log10(ymax) - std::log10(ymin)) * i / yticks;
            y = std::pow(10.0, lg);
        } else {
            y = ymin + (ymax - ymin) * i / yticks;
        }
        const double py = sy(y);
        out << "<line x1=\"" << num(kMarginL - 5) << "\" y1=\"" << num(py) << "\" x2=\""
            << num(kMarginL) << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(kMarginL - 8) << "\" y=\"" << num(py + 4)
            << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }
    out << "<text x=\"18\" y=\"" << num(kMarginT + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << num(kMarginT + plot_h / 2)
        << ")\">f(x_k) - f*</text>\n";

    // series
    for (std::size_t s = 0; s < traces.size(); ++s) {
        const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const TraceRow& r : traces[s].rows)
            out << num(sx(x_of(r, spec.axis))) << "," << num(sy(y_val(r.gap))) << " ";
        out << "\"/>\n";
        // legend entry
        const double ly = kMarginT + 14.0 + 20.0 * static_cast<double>(s);
        const double lx = kWidth - kMarginR + 12.0;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
            << num(lx + 24) << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly) << "\">" << traces[s].label
            << "</text>\n";
    }
    out << "</svg>\n";
}

void emit_plot(const std::vector<RunTrace>& traces, const PlotSpec& spec,
               const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out)
        throw ConfigError("cannot open for writing: " + file.string());
    emit_plot(traces, spec, out);
}

} // namespace zopf
