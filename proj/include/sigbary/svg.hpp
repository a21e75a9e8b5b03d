#pragma once

// Static SVG polylines for 2-D paths.

#include "sigbary/signatures.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace sigbary {

struct PlotPath {
    PwlPath path;
    std::string label;
    bool emphasized = false;
};

/// Throws sigbary::Error unless every path has dim 2.
std::string render_svg(const std::vector<PlotPath>& paths);
void write_svg(const std::filesystem::path& file, const std::vector<PlotPath>& paths);

} // namespace sigbary
