#pragma once

#include "zopf/trace.hpp"

#include <filesystem>
#include <iosfwd>

namespace zopf {

/// Header is exactly `k,directions,evaluations,lmo_calls,f_value,gap`;
/// floats are written with 17 significant digits.
void write_trace_csv(const RunTrace& trace, std::ostream& out);
void write_trace_csv(const RunTrace& trace, const std::filesystem::path& file);

RunTrace read_trace_csv(std::istream& in, const std::string& label);
RunTrace read_trace_csv(const std::filesystem::path& file);

} // namespace zopf
