//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file embed.cpp
//---------------------------------------------------------------------------//
#include "mcrt/embed.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "io_util.hpp"
#include "mcrt/error.hpp"
#include "mcrt/stats.hpp"
#include "mcrt/walk.hpp"

namespace mcrt
{
VertexField Embedding::x() const
{
    VertexField out(position.size());
    for (std::size_t i = 0; i < position.size(); ++i)
        out[i] = position[i].x;
    return out;
}

VertexField Embedding::y() const
{
    VertexField out(position.size());
    for (std::size_t i = 0; i < position.size(); ++i)
        out[i] = position[i].y;
    return out;
}

double Embedding::face_area(MatedCrtMap const& map, std::size_t f) const
{
    double twice = 0;
    for (std::uint32_t d : faces.face(f))
    {
        Point const& p = position[map.end_owner(d)];
        Point const& q = position[map.end(d).to];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * twice;
}

double harmonic_residual(MatedCrtMap const& map, Embedding const& emb)
{
    double worst = 0;
    for (Vertex v = 0; v < map.vertex_count(); ++v)
    {
        if (emb.on_circle[v] || map.degree(v) == 0)
            continue;
        double sx = 0, sy = 0;
        for (auto const& e : map.ends(v))
        {
            sx += emb.position[e.to].x;
            sy += emb.position[e.to].y;
        }
        double const d = map.degree(v);
        worst = std::max({worst,
                          std::abs(sx / d - emb.position[v].x),
                          std::abs(sy / d - emb.position[v].y)});
    }
    return worst;
}

Embedding tutte_embed(MatedCrtMap const& map, EmbedConfig const& config)
{
    std::size_t const n = map.vertex_count();
    if (n == 0)
        throw StructuralError("cannot embed an empty map");
    if (!map.has_rotation())
        throw StructuralError("Tutte embedding needs a rotation system");
    if (!map.has_boundary() || map.boundary_vertices().empty())
        throw StructuralError("Tutte embedding needs a nonempty boundary");
    if (!is_connected(map, std::vector<char>(n, 1)))
        throw StructuralError("Tutte embedding needs a connected map");

    Embedding emb;
    emb.position.assign(n, Point{});
    emb.on_circle.assign(n, 0);
    if (n == 1)
    {
        emb.position[0] = {1.0, 0.0};
        emb.on_circle[0] = 1;
        emb.boundary_cycle = {0};
        return emb;
    }

    emb.faces = trace_faces(map);
    auto const& faces = emb.faces;

    // Outer face: the face seeing the most distinct boundary vertices.
    std::vector<std::uint32_t> stamp(n, std::numeric_limits<std::uint32_t>::max());
    std::size_t best = 0;
    std::size_t best_count = 0;
    for (std::size_t f = 0; f < faces.size(); ++f)
    {
        std::size_t count = 0;
        for (std::uint32_t d : faces.face(f))
        {
            Vertex v = map.end_owner(d);
            if (map.is_boundary(v) && stamp[v] != f)
            {
                stamp[v] = static_cast<std::uint32_t>(f);
                ++count;
            }
        }
        if (count > best_count)
        {
            best = f;
            best_count = count;
        }
    }
    emb.outer_face = static_cast<std::uint32_t>(best);

    // Boundary order by first appearance, weighted by incident outer edges.
    std::vector<double> weight(n, 0.0);
    for (std::uint32_t d : faces.face(best))
    {
        Vertex v = map.end_owner(d);
        if (!map.is_boundary(v))
            throw StructuralError("vertex " + std::to_string(v)
                                  + " lies on the outer face but is not "
                                    "marked boundary");
        if (!emb.on_circle[v])
        {
            emb.on_circle[v] = 1;
            emb.boundary_cycle.push_back(v);
        }
        weight[v] += 1.0;
        weight[map.end(d).to] += 1.0;
    }
    if (emb.boundary_cycle.size() != map.boundary_vertices().size())
        throw StructuralError("boundary vertices do not form a single cycle "
                              "around the outer face");

    double total = 0;
    for (Vertex v : emb.boundary_cycle)
        total += weight[v];
    double acc = 0;
    for (Vertex v : emb.boundary_cycle)
    {
        double const theta = 2 * std::numbers::pi * (acc + 0.5 * weight[v]) / total;
        emb.position[v] = {std::cos(theta), std::sin(theta)};
        acc += weight[v];
    }

    std::vector<char> interior(n, 0);
    bool any_interior = false;
    for (Vertex v = 0; v < n; ++v)
    {
        interior[v] = emb.on_circle[v] ? 0 : 1;
        any_interior = any_interior || interior[v];
    }
    if (any_interior)
    {
        Domain dom(map, interior);
        VertexField bx(n, 0.0), by(n, 0.0), zero(n, 0.0);
        for (Vertex v : emb.boundary_cycle)
        {
            bx[v] = emb.position[v].x;
            by[v] = emb.position[v].y;
        }
        auto x = solve_dirichlet(dom, bx, zero, config.solver);
        auto y = solve_dirichlet(dom, by, zero, config.solver);
        for (Vertex v = 0; v < n; ++v)
            if (interior[v])
                emb.position[v] = {x[v], y[v]};
    }

    // Orientation: inner faces counterclockwise.
    double signed_total = 0;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (f != best)
            signed_total += emb.face_area(map, f);
    if (signed_total < 0)
    {
        emb.reflected = true;
        for (auto& p : emb.position)
            p.y = -p.y;
    }
    for (std::size_t f = 0; f < faces.size(); ++f)
    {
        if (f == best)
            continue;
        double const area = emb.face_area(map, f);
        if (area < -config.area_tol)
        {
            ++emb.flipped_faces;
            emb.flipped.push_back(static_cast<std::uint32_t>(f));
        }
        else if (area <= config.area_tol)
        {
            ++emb.degenerate_faces;
        }
    }

    emb.harmonic_residual = harmonic_residual(map, emb);
    for (Vertex v : emb.boundary_cycle)
    {
        double const r = std::hypot(emb.position[v].x, emb.position[v].y);
        emb.circle_residual = std::max(emb.circle_residual, std::abs(r - 1.0));
    }
    return emb;
}

//---------------------------------------------------------------------------//
double hausdorff_distance(std::span<Point const> a, std::span<Point const> b)
{
    if (a.empty() && b.empty())
        return 0.0;
    if (a.empty() || b.empty())
        return std::numeric_limits<double>::infinity();
    auto directed = [](std::span<Point const> from, std::span<Point const> to) {
        double worst = 0;
        for (Point const& p : from)
        {
            double nearest = std::numeric_limits<double>::infinity();
            for (Point const& q : to)
            {
                double const dx = p.x - q.x, dy = p.y - q.y;
                nearest = std::min(nearest, dx * dx + dy * dy);
                if (nearest <= worst)
                    break;
            }
            worst = std::max(worst, nearest);
        }
        return std::sqrt(worst);
    };
    return std::max(directed(a, b), directed(b, a));
}

ShapeMetrics shape_metrics(Embedding const& emb,
                           std::span<char const> a,
                           std::span<char const> b)
{
    std::size_t const n = emb.position.size();
    if (a.size() != n || b.size() != n)
        throw DomainError("vertex set sizes do not match the embedding");
    ShapeMetrics m;
    std::vector<Point> pa, pb;
    for (std::size_t v = 0; v < n; ++v)
    {
        bool const ia = a[v] != 0, ib = b[v] != 0;
        if (ia || ib)
        {
            if (std::isnan(emb.position[v].x) || std::isnan(emb.position[v].y))
                throw DomainError("embedding does not cover vertex "
                                  + std::to_string(v));
            ++m.union_size;
        }
        if (ia != ib)
            ++m.symdiff_size;
        if (ia)
            pa.push_back(emb.position[v]);
        if (ib)
            pb.push_back(emb.position[v]);
    }
    if (m.union_size == 0)
        throw DomainError("shape metrics of two empty sets");
    m.symdiff_fraction = static_cast<double>(m.symdiff_size)
                         / static_cast<double>(m.union_size);
    m.hausdorff = hausdorff_distance(pa, pb);
    return m;
}

//---------------------------------------------------------------------------//
void write_positions_csv(Embedding const& emb, std::ostream& os)
{
    os << "vertex,x,y,boundary\n";
    for (std::size_t v = 0; v < emb.position.size(); ++v)
        os << v << ',' << detail::fmt_double(emb.position[v].x) << ','
           << detail::fmt_double(emb.position[v].y) << ','
           << int(emb.on_circle[v]) << '\n';
}

std::vector<Point> read_positions_csv(std::istream& is)
{
    std::vector<Point> out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("vertex,x,y", 0) != 0)
        throw IoError("positions CSV: missing header");
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string cell[3];
        for (auto& c : cell)
            if (!std::getline(row, c, ','))
                throw IoError("positions CSV: short row '" + line + "'");
        if (std::stoul(cell[0]) != out.size())
            throw IoError("positions CSV: rows out of order");
        out.push_back({std::stod(cell[1]), std::stod(cell[2])});
    }
    return out;
}

void write_faces_json(MatedCrtMap const& map,
                      Embedding const& emb,
                      std::ostream& os)
{
    os << "{\"format\":\"mcrt-faces\",\"format_version\":1,\"outer_face\":"
       << emb.outer_face << ",\"reflected\":" << (emb.reflected ? "true" : "false")
       << ",\"faces\":[";
    for (std::size_t f = 0; f < emb.faces.size(); ++f)
    {
        os << (f ? ",[" : "[");
        bool first = true;
        for (std::uint32_t d : emb.faces.face(f))
        {
            os << (first ? "" : ",") << map.end_owner(d);
            first = false;
        }
        os << ']';
    }
    os << "]}\n";
}

ExitScale median_exit_steps(MatedCrtMap const& map,
                            std::span<Point const> position,
                            Vertex source,
                            double radius,
                            std::size_t walks,
                            std::uint64_t seed,
                            std::uint64_t max_steps)
{
    if (position.size() != map.vertex_count() || source >= map.vertex_count())
        throw DomainError("positions must cover the map and source must be a vertex");
    if (!(radius > 0) || walks == 0)
        throw DomainError("need a positive radius and at least one walk");
    Point const o = position[source];
    auto stop = [&](Vertex v) {
        return map.is_boundary(v)
               || std::hypot(position[v].x - o.x, position[v].y - o.y) >= radius;
    };
    std::uint64_t const limit = max_steps ? max_steps : default_max_steps(map);
    ExitScale out;
    out.walks = walks;
    std::vector<double> steps(walks);
    for (std::size_t w = 0; w < walks; ++w)
    {
        WalkerStream stream(seed, w);
        auto r = walk_until(map, source, stop, stream, limit);
        steps[w] = static_cast<double>(r.steps);
        Point const p = position[r.stopped_at];
        if (std::hypot(p.x - o.x, p.y - o.y) < radius)
            ++out.stopped_by_boundary;
    }
    out.median_steps = median(std::move(steps));
    return out;
}

}  // namespace mcrt
