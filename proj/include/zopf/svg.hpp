#pragma once

#include "zopf/trace.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace zopf {

enum class PlotAxis { vs_evaluations, vs_iterations };

struct PlotSpec {
    PlotAxis axis = PlotAxis::vs_evaluations;
    bool log_y = true;
    std::string title;
};

/// Renders an 800x600 SVG line chart, one polyline per trace (gap on the y
/// axis), with a legend naming each trace. With log_y, non-positive gaps are
/// clamped to 1e-16 and a warning is printed to stderr.
void emit_plot(const std::vector<RunTrace>& traces, const PlotSpec& spec, std::ostream& out);
void emit_plot(const std::vector<RunTrace>& traces, const PlotSpec& spec,
               const std::filesystem::path& file);

} // namespace zopf
