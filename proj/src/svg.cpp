#include "sigbary/svg.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace sigbary {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;
constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#17becf"};

struct Point {
    double x;
    double y;
};

std::vector<Point> points_of(const PwlPath& path) {
    std::vector<Point> out;
    for (const auto& v : path.vertices()) out.push_back({v[0].get_d(), v[1].get_d()});
    return out;
}

} // namespace

std::string render_svg(const std::vector<PlotPath>& paths) {
    std::vector<std::vector<Point>> all;
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& p : paths) {
        if (p.path.dim() != 2) throw Error("svg output needs 2-dimensional paths");
        all.push_back(points_of(p.path));
        for (const auto& q : all.back()) {
            lo_x = std::min(lo_x, q.x);
            hi_x = std::max(hi_x, q.x);
            lo_y = std::min(lo_y, q.y);
            hi_y = std::max(hi_y, q.y);
        }
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = (kSize - 2 * kMargin) / span;
    auto sx = [&](double x) { return kMargin + (x - lo_x) * scale; };
    auto sy = [&](double y) { return kSize - kMargin - (y - lo_y) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"3\" fill=\"black\"/>\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const char* colour = paths[i].emphasized ? "#d62728" : kPalette[i % kPalette.size()];
        out << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\""
            << (paths[i].emphasized ? 3 : 1.5) << "\"";
        if (!paths[i].emphasized) out << " stroke-dasharray=\"6 3\"";
        out << " points=\"";
        for (std::size_t j = 0; j < all[i].size(); ++j)
            out << (j ? " " : "") << sx(all[i][j].x) << ',' << sy(all[i][j].y);
        out << "\"><title>" << paths[i].label << "</title></polyline>\n";
        out << "  <text x=\"" << kMargin / 4 << "\" y=\"" << 16 * (i + 1) << "\" font-size=\"12\" fill=\"" << colour
            << "\">" << paths[i].label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg(const std::filesystem::path& file, const std::vector<PlotPath>& paths) {
    const std::string text = render_svg(paths);
    std::ofstream out(file);
    if (!out) throw Error("cannot write " + file.string());
    out << text;
}

} // namespace sigbary
