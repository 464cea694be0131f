//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/maps.hpp
//! Mated-CRT planar maps built from a path pair.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathgen.hpp"

namespace mcrt
{
//---------------------------------------------------------------------------//
//! Vertex id; vertex k (0-based) is cell k + 1 of the path window.
using Vertex = std::uint32_t;

//! Which adjacency rule produced an edge.
enum class EdgeTag : std::uint8_t
{
    L = 0,            //!< Infimum condition on L, |u - v| > 1
    R = 1,            //!< Infimum condition on R, |u - v| > 1
    consecutive = 2,  //!< u + 1 == v (holds for both coordinates, one edge)
};

char const* to_string(EdgeTag tag) noexcept;

struct Edge
{
    Vertex u;  //!< Smaller endpoint
    Vertex v;  //!< Larger endpoint
    EdgeTag tag;

    friend bool operator==(Edge const&, Edge const&) = default;
};

//! One side of an edge as seen from its owning vertex.
struct EdgeEnd
{
    Vertex to;
    std::uint32_t edge;
};

//! Vertex id of the window-center cell ceil(n/2).
constexpr Vertex center_vertex(std::size_t n) noexcept
{
    return static_cast<Vertex>((n + 1) / 2 - 1);
}

//---------------------------------------------------------------------------//
/*!
 * Multigraph with per-edge provenance, an optional rotation system and an
 * optional boundary marking.
 *
 * Incident edge ends of each vertex are stored contiguously. Once
 * build_rotation() has run, the order of each vertex's ends is its
 * counterclockwise rotation. End indices are global positions in the
 * concatenated end array; twin(i) is the opposite end of the same edge.
 */
class MatedCrtMap
{
  public:
    MatedCrtMap() = default;

    //! Assemble from an edge list; ends appear in edge-list order.
    static MatedCrtMap from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<Edge const> edges() const noexcept { return edges_; }

    std::span<EdgeEnd const> ends(Vertex v) const noexcept
    {
        return {ends_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::uint32_t degree(Vertex v) const noexcept
    {
        return offsets_[v + 1] - offsets_[v];
    }
    std::uint32_t end_offset(Vertex v) const noexcept { return offsets_[v]; }
    std::size_t end_count() const noexcept { return ends_.size(); }
    EdgeEnd const& end(std::uint32_t i) const noexcept { return ends_[i]; }
    Vertex end_owner(std::uint32_t i) const noexcept { return owner_[i]; }
    std::uint32_t twin(std::uint32_t i) const noexcept { return twin_[i]; }

    bool has_rotation() const noexcept { return has_rotation_; }
    bool has_boundary() const noexcept { return !boundary_.empty(); }
    bool is_boundary(Vertex v) const noexcept
    {
        return !boundary_.empty() && boundary_[v] != 0;
    }
    std::span<char const> boundary_mask() const noexcept { return boundary_; }
    std::vector<Vertex> boundary_vertices() const;

    std::uint32_t max_degree() const noexcept;
    double mean_degree() const noexcept;
    double boundary_fraction() const noexcept;

    //! Replace the per-vertex end order; each list must permute that
    //! vertex's ends. Marks the map as carrying a rotation system.
    void set_rotation(std::vector<std::vector<EdgeEnd>> const& rotation);
    void set_boundary(std::vector<char> mask);

  private:
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<EdgeEnd> ends_;
    std::vector<Vertex> owner_;
    std::vector<std::uint32_t> twin_;
    std::vector<char> boundary_;
    bool has_rotation_{false};

    void rebuild_twins();
};

//---------------------------------------------------------------------------//
// Construction
//---------------------------------------------------------------------------//
/*!
 * Edges of the mated-CRT map of a path pair.
 *
 * For each coordinate X the cell infimum is taken over the cell's two mesh
 * samples. Cells u < v with v > u + 1 are X-adjacent iff
 *   max(inf_u X, inf_v X) <= min X[u .. v-1]   (cell indices 1-based),
 * where an exact tie between an endpoint cell and an intermediate cell is
 * won by the lower-indexed cell. Consecutive cells always share one edge.
 * Runs in O(n) using a monotone stack per coordinate.
 */
MatedCrtMap build_map(PathPair const& path);

/*!
 * Mark vertices whose adjacency would change if the window were extended:
 * a cell is boundary iff, for L or R, its infimum beats every cell to its
 * left or every cell to its right (same tie rule as build_map).
 */
MatedCrtMap mark_boundary(MatedCrtMap map, PathPair const& path);

/*!
 * Attach the planar rotation system and validate it.
 *
 * Counterclockwise order around u, with the window drawn left to right,
 * L-arcs above the line and R-arcs below:
 *   u+1, L-arcs to v > u+1 (increasing v), L-arcs to a < u-1 (increasing a),
 *   u-1, R-arcs to a < u-1 (decreasing a), R-arcs to v > u+1 (decreasing v).
 * Throws StructuralError if Euler's formula fails or, when a boundary is
 * marked, if a face avoiding the boundary is not a triangle.
 */
MatedCrtMap build_rotation(MatedCrtMap map);

//! build_map + mark_boundary + build_rotation.
MatedCrtMap generate_map(PathPair const& path);

//---------------------------------------------------------------------------//
// Faces and structure checks
//---------------------------------------------------------------------------//
/*!
 * Faces traced through the rotation system.
 *
 * A face is a cyclic list of darts (global end indices). After dart i from
 * u to v the face continues with the end preceding twin(i) in the rotation
 * of v.
 */
struct FaceList
{
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint32_t> darts;

    std::size_t size() const noexcept { return offsets.size() - 1; }
    std::span<std::uint32_t const> face(std::size_t f) const noexcept
    {
        return {darts.data() + offsets[f], offsets[f + 1] - offsets[f]};
    }
    //! face_of[dart] = index of the face containing that dart.
    std::vector<std::uint32_t> face_of;
};

FaceList trace_faces(MatedCrtMap const& map);

//! Dart of vertex 0 lying on the outer (window-exterior) face.
std::uint32_t outer_face_dart(MatedCrtMap const& map);

struct StructureReport
{
    std::size_t vertices{0};
    std::size_t edges{0};
    std::size_t faces{0};
    std::size_t components{0};
    long euler{0};  //!< V - E + F
    std::size_t non_triangular_inner_faces{0};
    std::vector<Vertex> offending_face;  //!< First failing face, if any
    std::string problem;                 //!< Empty when valid

    bool ok() const noexcept { return problem.empty(); }
};

//! Structural checks: edge/rotation consistency, consecutive adjacency,
//! Euler's formula and (if marked) triangles away from the boundary.
StructureReport check_structure(MatedCrtMap const& map);

//! check_structure(), throwing StructuralError on failure.
void validate_structure(MatedCrtMap const& map);

//---------------------------------------------------------------------------//
// Vertex sets
//---------------------------------------------------------------------------//
/*!
 * A vertex set (interior) with its outer vertex boundary: the vertices
 * outside the set with at least one edge into it.
 *
 * The map must outlive the domain.
 */
class Domain
{
  public:
    Domain(MatedCrtMap const& map, std::vector<char> interior_mask);

    MatedCrtMap const& map() const noexcept { return *map_; }
    std::span<Vertex const> interior() const noexcept { return interior_; }
    std::span<Vertex const> boundary() const noexcept { return boundary_; }
    bool is_interior(Vertex v) const noexcept { return mask_[v] == 1; }
    bool is_boundary(Vertex v) const noexcept { return mask_[v] == 2; }
    bool in_closure(Vertex v) const noexcept { return mask_[v] != 0; }

  private:
    MatedCrtMap const* map_;
    std::vector<char> mask_;  // 0 outside, 1 interior, 2 boundary
    std::vector<Vertex> interior_;
    std::vector<Vertex> boundary_;
};

//! Domain of the vertices satisfying a predicate; empty set -> DomainError.
template<class Pred>
Domain restrict_domain(MatedCrtMap const& map, Pred&& pred)
{
    std::vector<char> mask(map.vertex_count(), 0);
    for (Vertex v = 0; v < map.vertex_count(); ++v)
        mask[v] = pred(v) ? 1 : 0;
    return Domain(map, std::move(mask));
}

//! Domain consisting of every vertex not marked as window boundary.
Domain window_interior(MatedCrtMap const& map);

//! Unweighted graph distance from a source (UINT32_MAX if unreachable).
std::vector<std::uint32_t> bfs_distances(MatedCrtMap const& map, Vertex source);

//! True if the vertices with mask != 0 induce a connected subgraph
//! (an empty set counts as connected).
bool is_connected(MatedCrtMap const& map, std::span<char const> mask);

//---------------------------------------------------------------------------//
}  // namespace mcrt
