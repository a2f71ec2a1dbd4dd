#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>

#include "frieze/diagonal_map.hpp"
#include "frieze/polygon.hpp"
#include "frieze/tpath.hpp"

namespace frieze {

namespace detail {

struct SvgPoint {
    double x;
    double y;
};

inline SvgPoint svg_vertex(int v, int n, double cx, double cy, double radius) {
    // vertex 0 at angle 90 degrees, anticlockwise; SVG's y axis points down
    double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * v / n;
    return {cx + radius * std::cos(angle), cy - radius * std::sin(angle)};
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline void svg_line(std::string& out, SvgPoint a, SvgPoint b, const std::string& style) {
    out += "  <line x1=\"" + svg_num(a.x) + "\" y1=\"" + svg_num(a.y) + "\" x2=\"" +
           svg_num(b.x) + "\" y2=\"" + svg_num(b.y) + "\" " + style + "/>\n";
}

inline void svg_text(std::string& out, SvgPoint at, const std::string& text,
                     const std::string& style) {
    out += "  <text x=\"" + svg_num(at.x) + "\" y=\"" + svg_num(at.y) + "\" " + style + ">" +
           text + "</text>\n";
}

inline const char* path_color(std::size_t i) {
    static const char* palette[] = {"#c62828", "#1565c0", "#2e7d32", "#ef6c00",
                                    "#6a1b9a", "#00838f", "#9e9d24", "#4e342e"};
    return palette[i % (sizeof palette / sizeof palette[0])];
}

} // namespace detail

// Draws the polygon with its dissection (solid), remaining valued diagonals
// (dashed, labelled when a map is given), T-paths as arrowed colored
// polylines, and the dotted diagonal joining the path endpoints.
template <Semifield K>
std::string emit_svg(const Polygon& p, const Dissection& d, const DiagonalMap<K>* f,
                     std::span<const TPath> paths) {
    using detail::SvgPoint;
    const int n = p.size();
    const double size = 520, cx = size / 2, cy = size / 2, radius = 210;
    auto vtx = [&](int v) { return detail::svg_vertex(v, n, cx, cy, radius); };
    auto mid = [](SvgPoint a, SvgPoint b) { return SvgPoint{(a.x + b.x) / 2, (a.y + b.y) / 2}; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(size) +
           "\" height=\"" + detail::svg_num(size) + "\" viewBox=\"0 0 " + detail::svg_num(size) +
           " " + detail::svg_num(size) + "\">\n";
    out += "  <defs>\n";
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::string color = detail::path_color(i);
        out += "    <marker id=\"arrow" + std::to_string(i) +
               "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
               "markerHeight=\"7\" orient=\"auto-start-reverse\">"
               "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" +
               color + "\"/></marker>\n";
    }
    out += "  </defs>\n";

    for (int v = 0; v < n; ++v)
        detail::svg_line(out, vtx(v), vtx(p.succ(v)),
                         "stroke=\"black\" stroke-width=\"1.5\"");

    if (f != nullptr) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 2; b < n; ++b) {
                Diagonal diag{a, b};
                if (diag.is_edge(p) || d.contains(diag)) continue;
                detail::svg_line(out, vtx(a), vtx(b),
                                 "stroke=\"#999999\" stroke-width=\"1\" "
                                 "stroke-dasharray=\"6 4\"");
            }
    }

    for (Diagonal diag : d.members())
        detail::svg_line(out, vtx(diag.a), vtx(diag.b), "stroke=\"black\" stroke-width=\"1.5\"");

    if (!paths.empty()) {
        detail::svg_line(out, vtx(paths.front().front()), vtx(paths.front().back()),
                         "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2 4\"");
        for (std::size_t i = 0; i < paths.size(); ++i) {
            std::string color = detail::path_color(i);
            for (std::size_t s = 0; s + 1 < paths[i].size(); ++s)
                detail::svg_line(out, vtx(paths[i][s]), vtx(paths[i][s + 1]),
                                 "stroke=\"" + color +
                                     "\" stroke-width=\"2\" fill=\"none\" marker-end=\"url(#arrow" +
                                     std::to_string(i) + ")\"");
        }
    }

    if (f != nullptr) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                SvgPoint m = mid(vtx(a), vtx(b));
                // nudge labels toward the rim so central ones overlap less
                m.x += (m.x - cx) * 0.08;
                m.y += (m.y - cy) * 0.08;
                detail::svg_text(out, m, f->value(a, b).str(),
                                 "font-size=\"12\" text-anchor=\"middle\" fill=\"#333333\"");
            }
    }

    for (int v = 0; v < n; ++v) {
        SvgPoint at = vtx(v);
        out += "  <circle cx=\"" + detail::svg_num(at.x) + "\" cy=\"" + detail::svg_num(at.y) +
               "\" r=\"3\" fill=\"black\"/>\n";
        SvgPoint label = detail::svg_vertex(v, n, cx, cy, radius + 20);
        detail::svg_text(out, label, std::to_string(v),
                         "font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\"");
    }

    out += "</svg>\n";
    return out;
}

inline std::string emit_svg(const Polygon& p, const Dissection& d) {
    return emit_svg<PositiveRational>(p, d, nullptr, {});
}

inline std::string emit_svg(const Polygon& p, const Dissection& d, std::span<const TPath> paths) {
    return emit_svg<PositiveRational>(p, d, nullptr, paths);
}

} // namespace frieze
