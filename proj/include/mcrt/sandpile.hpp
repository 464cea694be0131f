//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/sandpile.hpp
//! Divisible sandpile and the discrete obstacle problem.
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
//---------------------------------------------------------------------------//
enum class SweepOrder
{
    forward,             //!< Increasing vertex id
    random_permutation,  //!< A fixed random permutation drawn from seed
};

struct SweepPolicy
{
    SweepOrder order{SweepOrder::forward};
    std::uint64_t seed{0};
};

//! 1e-12 * max(T, 1).
double default_stab_tol(double T) noexcept;

/*!
 * Final configuration of the divisible sandpile started from mass T at one
 * vertex.
 *
 * Invariant (up to rounding): mass = T delta_source + deg Lap(odometer/deg).
 */
struct SandpileState
{
    VertexField mass;
    VertexField odometer;
    double T{0};
    Vertex source{};
    double stab_tol{0};
    std::uint64_t topplings{0};
    std::uint64_t sweeps{0};
};

/*!
 * Topple until every vertex holds at most 1 + stab_tol.
 *
 * A toppling vertex keeps mass 1 and sends its excess in equal parts along
 * its edge ends (a double edge carries two parts). Sweeps visit the
 * currently loaded vertices in the policy's order, Gauss-Seidel style.
 * Throws OverflowError as soon as mass would enter a window boundary vertex.
 */
SandpileState stabilize(MatedCrtMap const& map,
                        Vertex source,
                        double T,
                        SweepPolicy policy = {},
                        double stab_tol = 0.0);

//---------------------------------------------------------------------------//
//! Toppled set {v > v_tol} and the cluster cl({v > v_tol}) plus any vertex
//! holding more than mass_tol (the latter only matters when nothing toppled).
struct SandpileCluster
{
    std::vector<char> toppled;
    std::vector<char> closure;
    std::size_t toppled_count{0};
    std::size_t closure_count{0};
};

//! Tolerances <= 0 select 1e-9 * T.
SandpileCluster cluster(MatedCrtMap const& map,
                        SandpileState const& state,
                        double v_tol = 0.0,
                        double mass_tol = 0.0);

//! sup |mass - T delta_source - deg Lap(odometer/deg)|.
double structure_residual(MatedCrtMap const& map, SandpileState const& state);

/*!
 * |sum_a h(a) mass(a) - T h(source)| for h harmonic on the toppled set.
 *
 * Throws DomainError if |Lap h| > harmonic_tol * max|h| at a vertex with
 * odometer above v_tol (<= 0 selects 1e-9 * T).
 */
double mean_value_residual(MatedCrtMap const& map,
                           SandpileState const& state,
                           std::span<double const> h,
                           double v_tol = 0.0,
                           double harmonic_tol = 1e-8);

void write_sandpile_csv(SandpileState const& state, std::ostream& os);

//---------------------------------------------------------------------------//
// Obstacle problem
//---------------------------------------------------------------------------//
struct ObstacleConfig
{
    //! Green's function solve for the obstacle.
    SolverConfig solver{1e-12, 0, SolverMethod::conjugate_gradient};
    //! Solve for q; its values reach the exit-time scale, so rounding caps
    //! the attainable residual well above that of the obstacle.
    SolverConfig bound_solver{1e-10, 0, SolverMethod::conjugate_gradient};
    //! Pointwise bound on |min(r - Lap w, w - phi)|, relative to
    //! max(1, sup |phi|).
    double tolerance{1e-14};
    std::size_t max_sweeps{10'000'000};
    //! Lambda = {w - phi > cluster_tol}; <= 0 selects 1e-9 * t * deg(source).
    double cluster_tol{0.0};
};

/*!
 * Least w on the domain closure with Lap w <= r on the interior and
 * w >= phi, where Lap phi = t delta_source, phi = 0 on the boundary.
 *
 * phi comes from a Green's function solve; w from projected Gauss-Seidel
 * (w(a) <- max(phi(a), mean of neighbours - r(a))) started at the obstacle,
 * which increases monotonically to the least solution.
 */
struct ObstacleSolution
{
    VertexField threshold;  //!< r
    double t{0};
    Vertex source{};
    VertexField phi;
    VertexField w;
    VertexField q;  //!< Lap q = r on the interior, q = 0 on the boundary
    std::vector<char> cluster;
    std::size_t cluster_count{0};
    double complementarity{0};  //!< max |min(r - Lap w, w - phi)|
    std::size_t sweeps{0};
};

ObstacleSolution solve_obstacle(Domain const& domain,
                                std::span<double const> threshold,
                                double t,
                                Vertex source,
                                ObstacleConfig const& config = {});

//! Worst complementarity residual of a candidate over the domain interior.
double complementarity_residual(Domain const& domain,
                                std::span<double const> threshold,
                                std::span<double const> phi,
                                std::span<double const> w);

}  // namespace mcrt
