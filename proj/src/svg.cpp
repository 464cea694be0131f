//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file svg.cpp
//---------------------------------------------------------------------------//
#include "mcrt/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mcrt/error.hpp"

namespace mcrt
{
namespace
{
// Viridis, sampled at five stops.
constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                      {59, 82, 139},
                                                      {33, 145, 140},
                                                      {94, 201, 98},
                                                      {253, 231, 37}}};

std::string colour(double s)
{
    s = std::clamp(s, 0.0, 1.0) * (stops.size() - 1);
    auto i = std::min(static_cast<std::size_t>(s), stops.size() - 2);
    double f = s - static_cast<double>(i);
    char buf[8];
    int c[3];
    for (int k = 0; k < 3; ++k)
        c[k] = static_cast<int>(std::lround(stops[i][k] * (1 - f) + stops[i + 1][k] * f));
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
    return buf;
}

void append(std::string& out, char const* fmt, double a, double b)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    out += buf;
}
}  // namespace

std::string render_svg(MatedCrtMap const& map,
                       Embedding const& emb,
                       std::span<double const> value,
                       std::span<char const> markers,
                       SvgOptions const& options)
{
    std::size_t const n = map.vertex_count();
    if (emb.position.size() != n)
        throw DomainError("embedding does not match the map");
    if ((!value.empty() && value.size() != n) || (!markers.empty() && markers.size() != n))
        throw DomainError("per-vertex data size does not match the map");

    double const half = 0.5 * options.size;
    double const scale = half - options.margin;
    auto sx = [&](Point const& p) { return half + scale * p.x; };
    auto sy = [&](Point const& p) { return half - scale * p.y; };

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : value)
        if (!std::isnan(v))
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    double const span = hi > lo ? hi - lo : 1.0;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.size)
           + "\" height=\"" + std::to_string(options.size) + "\" viewBox=\"0 0 "
           + std::to_string(options.size) + ' ' + std::to_string(options.size) + "\">\n";
    out += "<!-- " + std::string(svg_style_version) + " -->\n";
    if (!options.title.empty())
        out += "<title>" + options.title + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    std::string const stroke = options.draw_edges
                                   ? " stroke=\"#333333\" stroke-width=\"0.15\""
                                   : "";
    out += "<g class=\"faces\"" + stroke + ">\n";
    for (std::size_t f = 0; f < emb.faces.size(); ++f)
    {
        if (f == emb.outer_face)
            continue;
        double best = std::numeric_limits<double>::infinity();
        std::string pts;
        for (std::uint32_t d : emb.faces.face(f))
        {
            Vertex v = map.end_owner(d);
            if (!value.empty() && !std::isnan(value[v]))
                best = std::min(best, value[v]);
            if (!pts.empty())
                pts += ' ';
            append(pts, "%.3f,%.3f", sx(emb.position[v]), sy(emb.position[v]));
        }
        std::string fill = std::isinf(best) ? "#e8e8e8" : colour((best - lo) / span);
        out += "<polygon points=\"" + pts + "\" fill=\"" + fill + "\"/>\n";
    }
    out += "</g>\n<g class=\"cluster\" fill=\"#d62728\">\n";
    char buf[96];
    for (Vertex v = 0; v < markers.size(); ++v)
    {
        if (!markers[v])
            continue;
        std::snprintf(buf, sizeof buf,
                      "<circle class=\"cluster-vertex\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.2f\"/>\n",
                      sx(emb.position[v]), sy(emb.position[v]), options.marker_radius);
        out += buf;
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace mcrt
