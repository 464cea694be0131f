//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/embed.hpp
//! Tutte embedding and planar shape metrics.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "maps.hpp"
#include "potential.hpp"

namespace mcrt
{
struct Point
{
    double x{0};
    double y{0};
};

struct EmbedConfig
{
    SolverConfig solver{1e-12, 0, SolverMethod::conjugate_gradient};
    //! Faces with |signed area| <= area_tol count as degenerate, not flipped.
    double area_tol{1e-12};
};

/*!
 * Straight-line drawing with the outer face on the unit circle and every
 * other vertex at the average of its neighbours (counted with multiplicity).
 *
 * The outer face is the face carrying the most boundary vertices; it must
 * contain every marked boundary vertex and nothing else. A vertex met more
 * than once along the outer face (a cut vertex of the window) is placed at
 * its first occurrence; arcs are proportional to the number of outer-face
 * edges incident to each vertex. The drawing is reflected if needed so that
 * inner faces are counterclockwise.
 */
struct Embedding
{
    std::vector<Point> position;
    FaceList faces;
    std::uint32_t outer_face{0};
    std::vector<Vertex> boundary_cycle;
    std::vector<char> on_circle;
    bool reflected{false};

    double harmonic_residual{0};  //!< max |mean of neighbours - position|
    double circle_residual{0};    //!< max ||position| - 1| on the boundary
    std::size_t flipped_faces{0};
    std::size_t degenerate_faces{0};
    std::vector<std::uint32_t> flipped;  //!< Face ids with negative area

    VertexField x() const;
    VertexField y() const;
    //! Signed area of face f (counterclockwise positive).
    double face_area(MatedCrtMap const& map, std::size_t f) const;
};

Embedding tutte_embed(MatedCrtMap const& map, EmbedConfig const& config = {});

//! max over interior (non-circle) vertices of |mean of neighbours - position|.
double harmonic_residual(MatedCrtMap const& map, Embedding const& emb);

//---------------------------------------------------------------------------//
struct ShapeMetrics
{
    double symdiff_fraction{0};  //!< |A symdiff B| / |A union B|
    double hausdorff{0};         //!< Of the embedded point sets
    std::size_t union_size{0};
    std::size_t symdiff_size{0};
};

/*!
 * Compare two vertex sets (masks) through their embedded positions.
 *
 * Throws DomainError when the union is empty. The Hausdorff distance is
 * infinite when exactly one set is empty.
 */
ShapeMetrics shape_metrics(Embedding const& emb,
                           std::span<char const> a,
                           std::span<char const> b);

double hausdorff_distance(std::span<Point const> a, std::span<Point const> b);

/*!
 * Time-scale estimate: the median step count of walks from source until the
 * embedded position is at distance >= radius from that of source, or the walk
 * hits a window boundary vertex. Walk w uses WalkerStream(seed, w).
 *
 * This is a quenched estimate on one finite window, not a ground truth.
 */
struct ExitScale
{
    double median_steps{0};
    std::size_t walks{0};
    std::size_t stopped_by_boundary{0};  //!< Walks that hit the window edge
};

ExitScale median_exit_steps(MatedCrtMap const& map,
                            std::span<Point const> position,
                            Vertex source,
                            double radius,
                            std::size_t walks,
                            std::uint64_t seed,
                            std::uint64_t max_steps = 0);

void write_positions_csv(Embedding const& emb, std::ostream& os);
std::vector<Point> read_positions_csv(std::istream& is);
void write_faces_json(MatedCrtMap const& map,
                      Embedding const& emb,
                      std::ostream& os);

}  // namespace mcrt
