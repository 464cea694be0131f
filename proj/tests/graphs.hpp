//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file graphs.hpp
//! Small hand-built maps with known answers.
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "mcrt/maps.hpp"

namespace graphs
{
using mcrt::Edge;
using mcrt::EdgeEnd;
using mcrt::EdgeTag;
using mcrt::MatedCrtMap;
using mcrt::Vertex;

inline std::uint32_t edge_index(MatedCrtMap const& m, Vertex a, Vertex b)
{
    if (a > b)
        std::swap(a, b);
    auto edges = m.edges();
    for (std::uint32_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == a && edges[i].v == b)
            return i;
    return ~0u;
}

//! Apply a rotation given as neighbour lists (simple graphs only).
inline void rotate(MatedCrtMap& m, std::vector<std::vector<Vertex>> const& order)
{
    std::vector<std::vector<EdgeEnd>> rot(order.size());
    for (Vertex v = 0; v < order.size(); ++v)
        for (Vertex w : order[v])
            rot[v].push_back({w, edge_index(m, v, w)});
    m.set_rotation(rot);
}

//! Center 0 joined to leaves 1..k; the leaves are the boundary unless
//! mark_leaves is false.
inline MatedCrtMap star(Vertex k, bool mark_leaves = true)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i)
        edges.push_back({0, i, EdgeTag::L});
    auto m = MatedCrtMap::from_edges(k + 1, edges);
    std::vector<char> b(k + 1, mark_leaves ? 1 : 0);
    b[0] = 0;
    m.set_boundary(b);
    std::vector<std::vector<Vertex>> order(k + 1);
    for (Vertex i = 1; i <= k; ++i)
    {
        order[0].push_back(i);
        order[i].push_back(0);
    }
    rotate(m, order);
    return m;
}

//! Hub 0 with rim cycle 1..k, all rim vertices on the boundary.
inline MatedCrtMap wheel(Vertex k)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= k; ++i)
        edges.push_back({0, i, EdgeTag::L});
    for (Vertex i = 1; i < k; ++i)
        edges.push_back({i, i + 1, EdgeTag::consecutive});
    edges.push_back({1, k, EdgeTag::R});
    auto m = MatedCrtMap::from_edges(k + 1, edges);
    std::vector<char> b(k + 1, 1);
    b[0] = 0;
    m.set_boundary(b);
    std::vector<std::vector<Vertex>> order(k + 1);
    for (Vertex i = 1; i <= k; ++i)
    {
        order[0].push_back(i);
        Vertex next = i == k ? 1 : i + 1;
        Vertex prev = i == 1 ? k : i - 1;
        order[i] = {next, 0, prev};
    }
    rotate(m, order);
    return m;
}

}  // namespace graphs
