//
//  svg.hpp
//  ladder
//
//  Standalone SVG figure of an axis-tangent ellipse and its ladders.
//
//  The ellipse outline is a closed polyline: for each of kOutlineSamples
//  directions θ the ray center + r·(cos θ, sin θ) meets the conic where
//  Q(θ)·r² + G(center) = 0, Q being the quadratic part of the conic, since the
//  linear term vanishes at the center.
//

#ifndef ladder_svg_hpp
#define ladder_svg_hpp

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "ladder/conic.hpp"
#include "ladder/solver.hpp"

namespace ladder {

inline constexpr int kOutlineSamples = 360;

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string svg_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace detail

inline std::string render_svg(const TangentEllipse& e, std::span<const LadderSolution> solutions) {
    using detail::svg_num;
    const ConicCoeffs k = conic_from_tangent_ellipse(e);
    const ExtremePoints ext = extreme_tangent_points(e);

    double width = std::max(2.0 * e.c(), ext.vertical.x);
    double height = std::max(2.0 * e.d(), ext.horizontal.y);
    for (const LadderSolution& s : solutions) {
        width = std::max(width, s.u);
        height = std::max(height, s.v);
    }
    const double mx = 0.05 * width;
    const double my = 0.05 * height;
    const double stroke = 0.004 * std::max(width, height);
    const double dot = 2.5 * stroke;

    // y is flipped by the group transform, so content lives at (x, −y).
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + svg_num(-mx) + " " +
           svg_num(-height - my) + " " + svg_num(width + 2.0 * mx) + " " +
           svg_num(height + 2.0 * my) + "\">\n";
    out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" + svg_num(stroke) + "\">\n";
    out += "<line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"" + svg_num(width + mx) +
           "\" y2=\"0\" stroke=\"black\"/>\n";
    out += "<line class=\"axis\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" + svg_num(height + my) +
           "\" stroke=\"black\"/>\n";

    const Point center = conic_center(k);
    const double g0 = evaluate(k, center);
    out += "<polygon class=\"ellipse\" stroke=\"steelblue\" points=\"";
    for (int i = 0; i < kOutlineSamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / kOutlineSamples;
        const double cx = std::cos(theta);
        const double sy = std::sin(theta);
        const double quad = k.a * cx * cx + k.b * sy * sy + 2.0 * k.cxy * cx * sy;
        const double r = std::sqrt(-g0 / quad);
        if (i > 0)
            out += ' ';
        out += svg_num(center.x + r * cx) + "," + svg_num(center.y + r * sy);
    }
    out += "\"/>\n";

    for (const LadderSolution& s : solutions) {
        out += "<line class=\"ladder\" x1=\"" + svg_num(s.u) + "\" y1=\"0\" x2=\"0\" y2=\"" +
               svg_num(s.v) + "\" stroke=\"firebrick\"/>\n";
    }
    for (const LadderSolution& s : solutions) {
        out += "<circle class=\"tangency\" cx=\"" + svg_num(s.tangency.x) + "\" cy=\"" +
               svg_num(s.tangency.y) + "\" r=\"" + svg_num(dot) + "\" fill=\"firebrick\"/>\n";
    }
    for (const Point p : {ext.horizontal, ext.vertical}) {
        out += "<circle class=\"arc-endpoint\" cx=\"" + svg_num(p.x) + "\" cy=\"" + svg_num(p.y) +
               "\" r=\"" + svg_num(dot) + "\" fill=\"steelblue\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

inline void emit_svg(const TangentEllipse& e, std::span<const LadderSolution> solutions,
                     const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw OutputError("cannot open " + path + " for writing");
    file << render_svg(e, solutions);
    file.flush();
    if (!file)
        throw OutputError("failed writing " + path);
}

} // namespace ladder

#endif /* ladder_svg_hpp */
