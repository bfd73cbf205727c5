#pragma once

#include <string>
#include <vector>

namespace pefet {

struct Series {
    std::string name;
    std::vector<double> x, y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
};

/// Static line plot as a standalone SVG document.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series);
void write_svg(const std::string& path, const PlotSpec& spec, const std::vector<Series>& series);

}  // namespace pefet
