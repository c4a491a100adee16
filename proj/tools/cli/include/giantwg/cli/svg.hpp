// svg.hpp — Minimal multi-series line chart

#pragma once

#include <string>
#include <vector>

namespace giantwg::cli {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

// Auto-scaled axes, up to eight colored series, legend in the top-right corner.
std::string render_line_chart(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                              const std::vector<Series>& series);

} // namespace giantwg::cli
