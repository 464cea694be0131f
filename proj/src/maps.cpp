//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/maps.cpp
//---------------------------------------------------------------------------//
#include "mcrt/maps.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "mcrt/error.hpp"

namespace mcrt
{
namespace
{
//---------------------------------------------------------------------------//
// Cell infima over the two mesh samples of each cell (0-based vertex w owns
// samples w and w + 1).
std::vector<double> cell_infima(std::vector<double> const& x)
{
    std::vector<double> c(x.size() - 1);
    for (std::size_t w = 0; w + 1 < x.size(); ++w)
        c[w] = std::min(x[w], x[w + 1]);
    return c;
}

// Strict total order on cells: value first, lower index wins ties.
inline bool key_less(std::vector<double> const& c, Vertex a, Vertex b)
{
    return c[a] < c[b] || (c[a] == c[b] && a < b);
}

// Non-consecutive visibility pairs of a key sequence: (u, v) with
// max(key u, key v) < key w for all u < w < v. Each such pair is
// (PSE(v), v) or (u, NSE(u)) for previous/next smaller element.
void visibility_pairs(std::vector<double> const& c,
                      EdgeTag tag,
                      std::vector<Edge>& out)
{
    std::vector<Vertex> stack;
    stack.reserve(64);
    auto const n = static_cast<Vertex>(c.size());
    for (Vertex v = 0; v < n; ++v)
    {
        while (!stack.empty() && key_less(c, v, stack.back()))
        {
            Vertex u = stack.back();
            stack.pop_back();
            if (v > u + 1)
                out.push_back({u, v, tag});
        }
        if (!stack.empty() && v > stack.back() + 1)
            out.push_back({stack.back(), v, tag});
        stack.push_back(v);
    }
}

std::vector<char> window_records(std::vector<double> const& c)
{
    std::size_t const n = c.size();
    std::vector<char> rec(n, 0);
    // Beats every cell to the left: strictly below all earlier values.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; ++u)
    {
        if (c[u] < best)
            rec[u] = 1;
        best = std::min(best, c[u]);
    }
    // Beats every cell to the right: ties go to the lower index.
    best = std::numeric_limits<double>::infinity();
    for (std::size_t u = n; u-- > 0;)
    {
        if (c[u] <= best)
            rec[u] = 1;
        best = std::min(best, c[u]);
    }
    return rec;
}

struct UnionFind
{
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x)
        {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

//---------------------------------------------------------------------------//
char const* to_string(EdgeTag tag) noexcept
{
    switch (tag)
    {
        case EdgeTag::L: return "L";
        case EdgeTag::R: return "R";
        case EdgeTag::consecutive: return "C";
    }
    return "?";
}

MatedCrtMap MatedCrtMap::from_edges(std::size_t n, std::vector<Edge> edges)
{
    if (n == 0)
        throw DomainError("a map needs at least one vertex");
    if (n >= std::numeric_limits<Vertex>::max())
        throw DomainError("too many vertices");
    MatedCrtMap m;
    m.edges_ = std::move(edges);
    m.offsets_.assign(n + 1, 0);
    for (Edge const& e : m.edges_)
    {
        if (e.u >= e.v || e.v >= n)
            throw StructuralError("edge endpoints out of range or unordered");
        ++m.offsets_[e.u + 1];
        ++m.offsets_[e.v + 1];
    }
    std::partial_sum(m.offsets_.begin(), m.offsets_.end(), m.offsets_.begin());
    m.ends_.resize(2 * m.edges_.size());
    m.owner_.resize(m.ends_.size());
    std::vector<std::uint32_t> fill(m.offsets_.begin(), m.offsets_.end() - 1);
    for (std::uint32_t i = 0; i < m.edges_.size(); ++i)
    {
        Edge const& e = m.edges_[i];
        m.ends_[fill[e.u]++] = {e.v, i};
        m.ends_[fill[e.v]++] = {e.u, i};
    }
    for (Vertex v = 0; v < n; ++v)
    {
        for (auto k = m.offsets_[v]; k < m.offsets_[v + 1]; ++k)
            m.owner_[k] = v;
    }
    m.rebuild_twins();
    return m;
}

void MatedCrtMap::rebuild_twins()
{
    std::vector<std::uint32_t> first(edges_.size(),
                                     std::numeric_limits<std::uint32_t>::max());
    twin_.assign(ends_.size(), 0);
    for (std::uint32_t k = 0; k < ends_.size(); ++k)
    {
        auto e = ends_[k].edge;
        if (first[e] == std::numeric_limits<std::uint32_t>::max())
        {
            first[e] = k;
        }
        else
        {
            twin_[k] = first[e];
            twin_[first[e]] = k;
        }
    }
}

void MatedCrtMap::set_rotation(std::vector<std::vector<EdgeEnd>> const& rotation)
{
    if (rotation.size() != vertex_count())
        throw StructuralError("rotation must list every vertex");
    for (Vertex v = 0; v < vertex_count(); ++v)
    {
        auto const& r = rotation[v];
        if (r.size() != degree(v))
            throw StructuralError("rotation of vertex " + std::to_string(v)
                                  + " does not match its degree");
        std::vector<std::uint32_t> have, want;
        for (auto const& e : ends(v))
            have.push_back(e.edge);
        for (auto const& e : r)
        {
            if (e.edge >= edges_.size())
                throw StructuralError("rotation references unknown edge");
            Edge const& ed = edges_[e.edge];
            Vertex other = ed.u == v ? ed.v : ed.u;
            if ((ed.u != v && ed.v != v) || other != e.to)
                throw StructuralError("rotation of vertex " + std::to_string(v)
                                      + " lists a foreign edge");
            want.push_back(e.edge);
        }
        std::sort(have.begin(), have.end());
        std::sort(want.begin(), want.end());
        if (have != want)
            throw StructuralError("rotation of vertex " + std::to_string(v)
                                  + " is not a permutation of its edges");
        std::copy(r.begin(), r.end(), ends_.begin() + offsets_[v]);
    }
    rebuild_twins();
    has_rotation_ = true;
}

void MatedCrtMap::set_boundary(std::vector<char> mask)
{
    if (!mask.empty() && mask.size() != vertex_count())
        throw DomainError("boundary mask has the wrong size");
    boundary_ = std::move(mask);
}

std::vector<Vertex> MatedCrtMap::boundary_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < boundary_.size(); ++v)
        if (boundary_[v])
            out.push_back(v);
    return out;
}

std::uint32_t MatedCrtMap::max_degree() const noexcept
{
    std::uint32_t m = 0;
    for (Vertex v = 0; v < vertex_count(); ++v)
        m = std::max(m, degree(v));
    return m;
}

double MatedCrtMap::mean_degree() const noexcept
{
    return vertex_count() == 0
               ? 0.0
               : static_cast<double>(ends_.size())
                     / static_cast<double>(vertex_count());
}

double MatedCrtMap::boundary_fraction() const noexcept
{
    if (boundary_.empty())
        return 0.0;
    auto b = std::count(boundary_.begin(), boundary_.end(), 1);
    return static_cast<double>(b) / static_cast<double>(vertex_count());
}

//---------------------------------------------------------------------------//
MatedCrtMap build_map(PathPair const& path)
{
    path.validate();
    std::size_t const n = path.n_cells;
    std::vector<Edge> edges;
    edges.reserve(3 * n);
    for (Vertex u = 0; u + 1 < n; ++u)
        edges.push_back({u, u + 1, EdgeTag::consecutive});
    visibility_pairs(cell_infima(path.L), EdgeTag::L, edges);
    visibility_pairs(cell_infima(path.R), EdgeTag::R, edges);
    std::sort(edges.begin(), edges.end(), [](Edge const& a, Edge const& b) {
        if (a.u != b.u)
            return a.u < b.u;
        if (a.v != b.v)
            return a.v < b.v;
        return a.tag < b.tag;
    });
    return MatedCrtMap::from_edges(n, std::move(edges));
}

MatedCrtMap mark_boundary(MatedCrtMap map, PathPair const& path)
{
    path.validate();
    if (path.n_cells != map.vertex_count())
        throw DomainError("path and map sizes differ");
    auto bl = window_records(cell_infima(path.L));
    auto br = window_records(cell_infima(path.R));
    for (std::size_t v = 0; v < bl.size(); ++v)
        bl[v] = (bl[v] || br[v]) ? 1 : 0;
    map.set_boundary(std::move(bl));
    return map;
}

MatedCrtMap build_rotation(MatedCrtMap map)
{
    std::size_t const n = map.vertex_count();
    std::vector<std::vector<EdgeEnd>> rotation(n);
    std::vector<EdgeEnd> l_right, l_left, r_left, r_right;
    for (Vertex u = 0; u < n; ++u)
    {
        l_right.clear();
        l_left.clear();
        r_left.clear();
        r_right.clear();
        EdgeEnd east{0, std::numeric_limits<std::uint32_t>::max()};
        EdgeEnd west = east;
        for (EdgeEnd const& e : map.ends(u))
        {
            EdgeTag tag = map.edges()[e.edge].tag;
            if (tag == EdgeTag::consecutive)
                (e.to > u ? east : west) = e;
            else if (tag == EdgeTag::L)
                (e.to > u ? l_right : l_left).push_back(e);
            else
                (e.to > u ? r_right : r_left).push_back(e);
        }
        auto by_to = [](EdgeEnd const& a, EdgeEnd const& b) {
            return a.to < b.to;
        };
        std::sort(l_right.begin(), l_right.end(), by_to);
        std::sort(l_left.begin(), l_left.end(), by_to);
        std::sort(r_left.rbegin(), r_left.rend(), by_to);
        std::sort(r_right.rbegin(), r_right.rend(), by_to);

        auto& r = rotation[u];
        r.reserve(map.degree(u));
        if (east.edge != std::numeric_limits<std::uint32_t>::max())
            r.push_back(east);
        r.insert(r.end(), l_right.begin(), l_right.end());
        r.insert(r.end(), l_left.begin(), l_left.end());
        if (west.edge != std::numeric_limits<std::uint32_t>::max())
            r.push_back(west);
        r.insert(r.end(), r_left.begin(), r_left.end());
        r.insert(r.end(), r_right.begin(), r_right.end());
    }
    map.set_rotation(rotation);
    validate_structure(map);
    return map;
}

MatedCrtMap generate_map(PathPair const& path)
{
    return build_rotation(mark_boundary(build_map(path), path));
}

//---------------------------------------------------------------------------//
FaceList trace_faces(MatedCrtMap const& map)
{
    FaceList faces;
    std::size_t const m = map.end_count();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    faces.face_of.assign(m, unset);
    faces.darts.reserve(m);
    for (std::uint32_t start = 0; start < m; ++start)
    {
        if (faces.face_of[start] != unset)
            continue;
        auto const f = static_cast<std::uint32_t>(faces.size());
        std::uint32_t d = start;
        do
        {
            faces.face_of[d] = f;
            faces.darts.push_back(d);
            std::uint32_t t = map.twin(d);
            Vertex v = map.end(d).to;
            std::uint32_t off = map.end_offset(v);
            std::uint32_t deg = map.degree(v);
            std::uint32_t local = t - off;
            d = off + (local + deg - 1) % deg;
        } while (d != start);
        faces.offsets.push_back(static_cast<std::uint32_t>(faces.darts.size()));
    }
    return faces;
}

std::uint32_t outer_face_dart(MatedCrtMap const& map)
{
    if (!map.has_rotation())
        throw StructuralError("outer face requires a rotation system");
    if (map.vertex_count() < 2)
        throw StructuralError("a single vertex has no darts");
    auto ends = map.ends(0);
    std::uint32_t above = 0;
    for (EdgeEnd const& e : ends)
    {
        if (map.edges()[e.edge].tag != EdgeTag::R)
            ++above;
    }
    return map.end_offset(0) + above - 1;
}

StructureReport check_structure(MatedCrtMap const& map)
{
    StructureReport rep;
    std::size_t const n = map.vertex_count();
    rep.vertices = n;
    rep.edges = map.edge_count();
    auto fail = [&rep](std::string msg) {
        if (rep.problem.empty())
            rep.problem = std::move(msg);
    };

    // Edge tags and multiplicities.
    {
        std::vector<Edge> sorted(map.edges().begin(), map.edges().end());
        std::sort(sorted.begin(), sorted.end(), [](Edge const& a, Edge const& b) {
            return std::tie(a.u, a.v, a.tag) < std::tie(b.u, b.v, b.tag);
        });
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            Edge const& e = sorted[i];
            if (e.u >= e.v || e.v >= n)
                fail("edge endpoints out of range");
            bool consec = e.v == e.u + 1;
            if (consec != (e.tag == EdgeTag::consecutive))
            {
                fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v)
                     + ") has an inconsistent tag");
            }
            if (i > 0 && sorted[i - 1] == e)
            {
                fail("duplicate edge (" + std::to_string(e.u) + ","
                     + std::to_string(e.v) + ")");
            }
        }
        std::size_t consec = 0;
        for (Edge const& e : sorted)
            consec += e.tag == EdgeTag::consecutive;
        if (consec != n - 1)
            fail("consecutive vertices are not all adjacent");
    }

    // End/twin consistency.
    for (std::uint32_t k = 0; k < map.end_count(); ++k)
    {
        std::uint32_t t = map.twin(k);
        if (t >= map.end_count() || map.twin(t) != k
            || map.end(t).edge != map.end(k).edge
            || map.end_owner(t) != map.end(k).to)
        {
            fail("edge ends are inconsistent at end " + std::to_string(k));
            break;
        }
    }

    UnionFind uf(n);
    for (Edge const& e : map.edges())
        if (e.u < n && e.v < n)
            uf.unite(e.u, e.v);
    for (Vertex v = 0; v < n; ++v)
        rep.components += uf.find(v) == v;
    if (rep.components != 1)
        fail("map is not connected");

    if (!map.has_rotation())
    {
        fail("map has no rotation system");
        return rep;
    }
    if (!rep.problem.empty())
        return rep;

    FaceList faces = trace_faces(map);
    std::size_t isolated = 0;
    for (Vertex v = 0; v < n; ++v)
        isolated += map.degree(v) == 0;
    rep.faces = faces.size() + isolated;
    rep.euler = static_cast<long>(n) - static_cast<long>(rep.edges)
                + static_cast<long>(rep.faces);
    if (rep.euler != 1 + static_cast<long>(rep.components))
    {
        std::ostringstream ss;
        ss << "Euler characteristic V - E + F = " << rep.euler
           << " (expected 2): rotation system is not planar";
        fail(ss.str());
    }

    if (map.has_boundary())
    {
        for (std::size_t f = 0; f < faces.size(); ++f)
        {
            auto darts = faces.face(f);
            bool touches = false;
            for (auto d : darts)
                touches = touches || map.is_boundary(map.end_owner(d));
            if (!touches && darts.size() != 3)
            {
                ++rep.non_triangular_inner_faces;
                if (rep.offending_face.empty())
                {
                    for (auto d : darts)
                        rep.offending_face.push_back(map.end_owner(d));
                }
            }
        }
        if (rep.non_triangular_inner_faces > 0)
        {
            std::ostringstream ss;
            ss << rep.non_triangular_inner_faces
               << " face(s) away from the boundary are not triangles; first: [";
            for (std::size_t i = 0; i < rep.offending_face.size(); ++i)
                ss << (i ? " " : "") << rep.offending_face[i];
            ss << "]";
            fail(ss.str());
        }
    }
    return rep;
}

void validate_structure(MatedCrtMap const& map)
{
    auto rep = check_structure(map);
    if (!rep.ok())
        throw StructuralError(rep.problem);
}

//---------------------------------------------------------------------------//
Domain::Domain(MatedCrtMap const& map, std::vector<char> interior_mask)
    : map_(&map), mask_(std::move(interior_mask))
{
    if (mask_.size() != map.vertex_count())
        throw DomainError("domain mask has the wrong size");
    for (Vertex v = 0; v < mask_.size(); ++v)
    {
        mask_[v] = mask_[v] ? 1 : 0;
        if (mask_[v])
            interior_.push_back(v);
    }
    if (interior_.empty())
        throw DomainError("domain interior is empty");
    for (Vertex v : interior_)
    {
        for (EdgeEnd const& e : map.ends(v))
        {
            if (mask_[e.to] == 0)
            {
                mask_[e.to] = 2;
                boundary_.push_back(e.to);
            }
        }
    }
    std::sort(boundary_.begin(), boundary_.end());
}

Domain window_interior(MatedCrtMap const& map)
{
    std::vector<char> mask(map.vertex_count(), 1);
    for (Vertex v = 0; v < map.vertex_count(); ++v)
        if (map.is_boundary(v))
            mask[v] = 0;
    return Domain(map, std::move(mask));
}

std::vector<std::uint32_t> bfs_distances(MatedCrtMap const& map, Vertex source)
{
    constexpr auto inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(map.vertex_count(), inf);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        Vertex v = queue[head];
        for (EdgeEnd const& e : map.ends(v))
        {
            if (dist[e.to] == inf)
            {
                dist[e.to] = dist[v] + 1;
                queue.push_back(e.to);
            }
        }
    }
    return dist;
}

bool is_connected(MatedCrtMap const& map, std::span<char const> mask)
{
    Vertex start = 0;
    std::size_t total = 0;
    for (Vertex v = 0; v < mask.size(); ++v)
    {
        if (mask[v])
        {
            if (total == 0)
                start = v;
            ++total;
        }
    }
    if (total == 0)
        return true;
    std::vector<char> seen(mask.size(), 0);
    std::vector<Vertex> queue{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        for (EdgeEnd const& e : map.ends(queue[head]))
        {
            if (mask[e.to] && !seen[e.to])
            {
                seen[e.to] = 1;
                queue.push_back(e.to);
            }
        }
    }
    return queue.size() == total;
}

}  // namespace mcrt
