#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rfkit/core.hpp"
#include "rfkit/stability.hpp"

namespace rfkit {

struct PlotCircle {
    SmithCircle circle;
    std::string label;
    std::optional<Region> stable_side;  // shaded at 20% opacity when present
};

struct PlotPoint {
    Complex value{0.0, 0.0};
    std::string label;
};

struct SmithPlotSpec {
    std::vector<PlotCircle> circles;
    std::vector<PlotPoint> points;
    bool show_unit_chart = true;
};

// Standalone deterministic SVG: 500x500 px viewport, chart center (250, 250),
// unit radius 240 px, positive imaginary axis up. Throws DuplicateLabel when
// two entries share a label.
std::string render_smith_svg(const SmithPlotSpec& plot);

// Renders and writes; throws IoError on write failure.
void write_smith_svg(const SmithPlotSpec& plot, const std::filesystem::path& out_path);

}  // namespace rfkit
