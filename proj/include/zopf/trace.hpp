#pragma once

#include <string>
#include <vector>

namespace zopf {

/// One row per outer iteration; counters are cumulative.
struct TraceRow {
    long long k = 0;
    long long directions = 0;  // random directions consumed so far
    long long evaluations = 0; // oracle calls so far (2 per direction)
    long long lmo_calls = 0;
    double f_value = 0.0;
    double gap = 0.0; // f(x_k) - f*
};

struct RunTrace {
    std::string label; // e.g. "zo-scgs_fixed100"
    std::vector<TraceRow> rows;
    bool stopped_on_budget = false;
};

} // namespace zopf
