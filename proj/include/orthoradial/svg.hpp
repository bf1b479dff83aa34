#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "orthoradial/layout.hpp"

namespace orthoradial {

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace detail

// Renders a cylinder drawing on the ortho-radial grid: rows map to
// concentric circles shrinking toward the center, columns to spokes with
// column 0 at twelve o'clock and columns advancing clockwise. Horizontal
// polyline segments become circular arcs, vertical ones radial segments.
// Output is deterministic for a fixed drawing.
inline std::string emit_svg(const PolylineDrawing& drawing) {
    int max_row = 1;
    for (auto& [c, r] : drawing.vertex) max_row = std::max(max_row, r);
    for (auto& line : drawing.edges)
        for (auto& [c, r] : line) max_row = std::max(max_row, r);

    const double pi = 3.14159265358979323846;
    const double size = 640.0;
    const double cx = size / 2, cy = size / 2;
    const double outer_r = size * 0.45;
    const double shrink = 0.72;
    auto radius = [&](double row) { return outer_r * std::pow(shrink, row - 1.0); };
    auto px = [&](double col, double row) {
        return cx + radius(row) * std::sin(2.0 * pi * col / drawing.width);
    };
    auto py = [&](double col, double row) {
        return cy - radius(row) * std::cos(2.0 * pi * col / drawing.width);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(size) +
           "\" height=\"" + detail::fmt(size) + "\" viewBox=\"0 0 " + detail::fmt(size) + " " +
           detail::fmt(size) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int r = 1; r <= max_row; ++r)
        svg += "<circle cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) + "\" r=\"" +
               detail::fmt(radius(r)) + "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    for (int c = 0; c < drawing.width; ++c)
        svg += "<line x1=\"" + detail::fmt(px(c, max_row)) + "\" y1=\"" +
               detail::fmt(py(c, max_row)) + "\" x2=\"" + detail::fmt(px(c, 1)) + "\" y2=\"" +
               detail::fmt(py(c, 1)) + "\" stroke=\"#eeeeee\"/>\n";
    svg += "<circle cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) +
           "\" r=\"2.5\" fill=\"#888888\"/>\n";

    for (const auto& line : drawing.edges) {
        std::string path;
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            auto [c1, r1] = line[i];
            auto [c2, r2] = line[i + 1];
            if (i == 0)
                path += "M " + detail::fmt(px(c1, r1)) + " " + detail::fmt(py(c1, r1)) + " ";
            if (r1 == r2 && c1 != c2) {
                // Arc along the row circle; lifted columns fix the side.
                // Arcs of half a turn and more are split to keep the flags
                // unambiguous.
                int steps = std::abs(c2 - c1);
                int dir = c2 > c1 ? 1 : -1;
                double a = radius(r1);
                int pieces = (2 * steps + drawing.width - 1) / drawing.width + 1;
                for (int p = 1; p <= pieces; ++p) {
                    double col = c1 + dir * (static_cast<double>(steps) * p / pieces);
                    path += "A " + detail::fmt(a) + " " + detail::fmt(a) + " 0 0 " +
                            (dir > 0 ? "1 " : "0 ") + detail::fmt(px(col, r1)) + " " +
                            detail::fmt(py(col, r1)) + " ";
                }
            } else {
                path += "L " + detail::fmt(px(c2, r2)) + " " + detail::fmt(py(c2, r2)) + " ";
            }
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\"/>\n";
    }
    for (auto& [c, r] : drawing.vertex)
        svg += "<circle cx=\"" + detail::fmt(px(c, r)) + "\" cy=\"" + detail::fmt(py(c, r)) +
               "\" r=\"4\" fill=\"#d62728\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace orthoradial
