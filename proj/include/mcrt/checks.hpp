//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/checks.hpp
//! Residual measurements shared by the verify suite and the tests.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <vector>

#include "maps.hpp"
#include "potential.hpp"
#include "sandpile.hpp"

namespace mcrt
{
//! Obstacle-solution properties; "excess" values are worst violations
//! (<= 0 means satisfied).
struct ObstacleChecks
{
    double lower_excess{0};   //!< max(q, phi) - w
    double upper_excess{0};   //!< w
    double lap_upper_excess{0};  //!< Lap w - r
    double lap_lower_excess{0};  //!< -Lap w
    double cluster_residual{0};  //!< max |Lap w - r| on Lambda
    bool cluster_connected{true};
    bool source_in_cluster{true};  //!< Vacuous unless t > r(source)
    bool strictly_interior{true};  //!< Lambda and its neighbours avoid the boundary
    double mass_rel_error{0};   //!< |sum deg Lap w - t deg(source)| / (t deg(source))
};

ObstacleChecks check_obstacle(Domain const& domain, ObstacleSolution const& sol);

//! sup over the domain closure of |v/deg - (w - phi)|.
double odometer_obstacle_gap(MatedCrtMap const& map,
                             SandpileState const& state,
                             ObstacleSolution const& sol);

/*!
 * Least action checks for a stabilized sandpile.
 *
 * Returns the worst violation of: v/deg is admissible (mass <= 1 + tol,
 * v >= 0); lowering v/deg at any sampled toppled vertex by rel * v/deg
 * makes it inadmissible; the obstacle-derived candidate w - phi is >= v/deg
 * - tol.
 */
double least_action_violation(MatedCrtMap const& map,
                              SandpileState const& state,
                              ObstacleSolution const* sol,
                              std::size_t samples,
                              std::uint64_t seed,
                              double tol);

//! Harmonic fields on the domain interior with uniform random boundary data.
std::vector<VertexField> random_harmonic_fields(Domain const& domain,
                                                std::size_t count,
                                                std::uint64_t seed,
                                                SolverConfig const& config);

//! Graph ball around center (BFS order) with at most max_vertices vertices
//! in the interior, excluding window boundary vertices.
Domain ball_domain(MatedCrtMap const& map, Vertex center, std::size_t max_vertices);

//! Sandpile specialisation of the obstacle problem: domain interior, r = 1/deg,
//! t = T / deg(source).
ObstacleSolution sandpile_obstacle(Domain const& domain,
                                   SandpileState const& state,
                                   ObstacleConfig const& config = {});

}  // namespace mcrt
