//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file checks.cpp
//---------------------------------------------------------------------------//
#include "mcrt/checks.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "mcrt/error.hpp"
#include "mcrt/rng.hpp"

namespace mcrt
{
ObstacleChecks check_obstacle(Domain const& domain, ObstacleSolution const& sol)
{
    auto const& map = domain.map();
    ObstacleChecks c;
    c.lower_excess = c.upper_excess = c.lap_upper_excess = c.lap_lower_excess
        = -std::numeric_limits<double>::infinity();
    double mass = 0;
    for (Vertex a : domain.interior())
    {
        double const lap = laplacian_apply(map, sol.w, a);
        double const r = sol.threshold[a];
        c.lower_excess = std::max(c.lower_excess, std::max(sol.q[a], sol.phi[a]) - sol.w[a]);
        c.upper_excess = std::max(c.upper_excess, sol.w[a]);
        c.lap_upper_excess = std::max(c.lap_upper_excess, lap - r);
        c.lap_lower_excess = std::max(c.lap_lower_excess, -lap);
        mass += lap * map.degree(a);
        if (sol.cluster[a])
        {
            c.cluster_residual = std::max(c.cluster_residual, std::abs(lap - r));
            for (auto const& e : map.ends(a))
                if (!domain.is_interior(e.to))
                    c.strictly_interior = false;
        }
    }
    c.cluster_connected = is_connected(map, sol.cluster);
    if (sol.t > sol.threshold[sol.source])
        c.source_in_cluster = sol.cluster[sol.source] != 0;
    double const expect = sol.t * map.degree(sol.source);
    c.mass_rel_error = expect > 0 ? std::abs(mass - expect) / expect : std::abs(mass);
    return c;
}

double odometer_obstacle_gap(MatedCrtMap const& map,
                             SandpileState const& state,
                             ObstacleSolution const& sol)
{
    double worst = 0;
    for (Vertex a = 0; a < map.vertex_count(); ++a)
    {
        if (std::isnan(sol.w[a]))
            continue;
        double const u = state.odometer[a] / map.degree(a);
        worst = std::max(worst, std::abs(u - (sol.w[a] - sol.phi[a])));
    }
    return worst;
}

double least_action_violation(MatedCrtMap const& map,
                              SandpileState const& state,
                              ObstacleSolution const* sol,
                              std::size_t samples,
                              std::uint64_t seed,
                              double tol)
{
    std::size_t const n = map.vertex_count();
    VertexField u(n);
    for (Vertex a = 0; a < n; ++a)
        u[a] = state.odometer[a] / map.degree(a);
    auto mass_at = [&](Vertex a) {
        double s = (a == state.source ? state.T : 0.0) - map.degree(a) * u[a];
        for (auto const& e : map.ends(a))
            s += u[e.to];
        return s;
    };
    double worst = -std::numeric_limits<double>::infinity();
    std::vector<Vertex> toppled;
    for (Vertex a = 0; a < n; ++a)
    {
        worst = std::max({worst, mass_at(a) - 1.0 - tol, -u[a] - tol});
        if (state.odometer[a] > 1e-9 * state.T)
            toppled.push_back(a);
    }
    CounterRng rng(derive_key(seed, 0x6c656173));
    for (std::size_t k = 0; k < samples && !toppled.empty(); ++k)
    {
        Vertex a = toppled[rng.below(static_cast<std::uint32_t>(toppled.size()))];
        double const eta = 1e-3 * u[a];
        double const lowered = mass_at(a) + map.degree(a) * eta;
        // The lowered candidate must violate the constraint.
        worst = std::max(worst, (1.0 + tol) - lowered);
    }
    if (sol)
    {
        for (Vertex a = 0; a < n; ++a)
            if (!std::isnan(sol->w[a]))
                worst = std::max(worst, u[a] - (sol->w[a] - sol->phi[a]) - tol);
    }
    return worst;
}

std::vector<VertexField> random_harmonic_fields(Domain const& domain,
                                                std::size_t count,
                                                std::uint64_t seed,
                                                SolverConfig const& config)
{
    std::size_t const n = domain.map().vertex_count();
    std::vector<VertexField> out;
    VertexField zero(n, 0.0);
    for (std::size_t k = 0; k < count; ++k)
    {
        CounterRng rng(derive_key(seed, 0x68000000 + k));
        VertexField data(n, 0.0);
        for (Vertex b : domain.boundary())
            data[b] = 2 * rng.uniform() - 1;
        out.push_back(solve_dirichlet(domain, data, zero, config));
    }
    return out;
}

Domain ball_domain(MatedCrtMap const& map, Vertex center, std::size_t max_vertices)
{
    std::size_t const n = map.vertex_count();
    if (center >= n || map.is_boundary(center))
        throw DomainError("ball center must be a non-boundary vertex");
    std::vector<char> mask(n, 0);
    std::deque<Vertex> queue{center};
    mask[center] = 1;
    std::size_t taken = 1;
    std::vector<char> seen(n, 0);
    seen[center] = 1;
    while (!queue.empty() && taken < max_vertices)
    {
        Vertex u = queue.front();
        queue.pop_front();
        for (auto const& e : map.ends(u))
        {
            if (seen[e.to] || map.is_boundary(e.to))
                continue;
            seen[e.to] = 1;
            if (taken == max_vertices)
                break;
            mask[e.to] = 1;
            ++taken;
            queue.push_back(e.to);
        }
    }
    return Domain(map, std::move(mask));
}

ObstacleSolution sandpile_obstacle(Domain const& domain,
                                   SandpileState const& state,
                                   ObstacleConfig const& config)
{
    auto const& map = domain.map();
    VertexField r(map.vertex_count());
    for (Vertex a = 0; a < map.vertex_count(); ++a)
        r[a] = 1.0 / std::max<std::uint32_t>(map.degree(a), 1);
    return solve_obstacle(domain, r, state.T / map.degree(state.source), state.source,
                          config);
}

}  // namespace mcrt
