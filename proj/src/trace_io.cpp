#include "zopf/trace_io.hpp"

#include "zopf/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace zopf {

namespace {
const char* kHeader = "k,directions,evaluations,lmo_calls,f_value,gap";
}

void write_trace_csv(const RunTrace& trace, std::ostream& out) {
    out << kHeader << "\n";
    char buf[128];
    for (const TraceRow& r : trace.rows) {
        std::snprintf(buf, sizeof(buf), "%lld,%lld,%lld,%lld,%.17g,%.17g", r.k, r.directions,
                      r.evaluations, r.lmo_calls, r.f_value, r.gap);
        out << buf << "\n";
    }
}

void write_trace_csv(const RunTrace& trace, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out)
        throw ConfigError("cannot open for writing: " + file.string());
    write_trace_csv(trace, out);
    if (!out.good())
        throw ConfigError("write failed: " + file.string());
}

RunTrace read_trace_csv(std::istream& in, const std::string& label) {
    RunTrace trace;
    trace.label = label;
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw ConfigError("trace csv: missing or unexpected header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        TraceRow r;
        if (std::sscanf(line.c_str(), "%lld,%lld,%lld,%lld,%lg,%lg", &r.k, &r.directions,
                        &r.evaluations, &r.lmo_calls, &r.f_value, &r.gap) != 6)
            throw ConfigError("trace csv: malformed row: " + line);
        trace.rows.push_back(r);
    }
    return trace;
}

RunTrace read_trace_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("cannot open trace csv: " + file.string());
    return read_trace_csv(in, file.stem().string());
}

} // namespace zopf
