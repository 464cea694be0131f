//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sandpile.cpp
//---------------------------------------------------------------------------//
#include "mcrt/sandpile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "io_util.hpp"
#include "mcrt/error.hpp"
#include "mcrt/rng.hpp"

namespace mcrt
{
namespace
{
std::vector<std::uint32_t> sweep_rank(std::size_t n, SweepPolicy policy)
{
    std::vector<std::uint32_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0u);
    if (policy.order == SweepOrder::random_permutation)
    {
        // Fisher-Yates with our own generator so the order is portable.
        CounterRng rng(derive_key(policy.seed, 0x73776565));
        for (std::size_t i = n; i > 1; --i)
        {
            auto j = rng.below(static_cast<std::uint32_t>(i));
            std::swap(rank[i - 1], rank[j]);
        }
    }
    return rank;
}

double resolve_tol(double tol, double T)
{
    return tol > 0 ? tol : 1e-9 * T;
}
}  // namespace

double default_stab_tol(double T) noexcept
{
    return 1e-12 * std::max(T, 1.0);
}

//---------------------------------------------------------------------------//
SandpileState stabilize(MatedCrtMap const& map,
                        Vertex source,
                        double T,
                        SweepPolicy policy,
                        double stab_tol)
{
    std::size_t const n = map.vertex_count();
    if (source >= n)
        throw DomainError("sandpile source " + std::to_string(source)
                          + " is not a vertex");
    if (!(T >= 0) || !std::isfinite(T))
        throw DomainError("initial mass must be finite and >= 0");
    if (stab_tol == 0.0)
        stab_tol = default_stab_tol(T);
    if (!(stab_tol > 0))
        throw DomainError("stab_tol must be positive");
    if (T > static_cast<double>(n))
        throw OverflowError("initial mass " + detail::fmt_double(T)
                            + " exceeds the vertex count");

    SandpileState st;
    st.T = T;
    st.source = source;
    st.stab_tol = stab_tol;
    st.mass.assign(n, 0.0);
    st.odometer.assign(n, 0.0);
    st.mass[source] = T;
    if (T <= 1.0)
        return st;
    if (map.is_boundary(source))
        throw OverflowError("sandpile source lies on the window boundary");

    auto const rank = sweep_rank(n, policy);
    auto by_rank = [&rank](Vertex a, Vertex b) { return rank[a] < rank[b]; };

    std::vector<Vertex> support{source};
    std::vector<Vertex> fresh;
    std::vector<Vertex> merged;
    auto& mass = st.mass;
    auto& odo = st.odometer;

    // Each sweep removes a fixed fraction of the excess; the cap only guards
    // against a map with no boundary marking around a huge T.
    std::uint64_t const max_sweeps = 1'000'000'000ULL / (n + 1) + 100'000;
    while (true)
    {
        for (Vertex v : support)
        {
            double const excess = mass[v] - 1.0;
            if (!(excess > 0))
                continue;
            mass[v] = 1.0;
            odo[v] += excess;
            ++st.topplings;
            double const share = excess / map.degree(v);
            for (auto const& e : map.ends(v))
            {
                if (map.is_boundary(e.to))
                    throw OverflowError(
                        "sandpile mass reached boundary vertex "
                        + std::to_string(e.to) + "; window too small for T = "
                        + detail::fmt_double(T));
                if (mass[e.to] == 0.0)
                    fresh.push_back(e.to);
                mass[e.to] += share;
            }
        }
        ++st.sweeps;
        if (!fresh.empty())
        {
            std::sort(fresh.begin(), fresh.end(), by_rank);
            merged.clear();
            std::merge(support.begin(), support.end(), fresh.begin(),
                       fresh.end(), std::back_inserter(merged), by_rank);
            support.swap(merged);
            fresh.clear();
        }
        double total_excess = 0;
        for (Vertex v : support)
            total_excess += std::max(mass[v] - 1.0, 0.0);
        if (total_excess <= stab_tol)
            break;
        if (st.sweeps >= max_sweeps)
            throw SolverError("sandpile did not stabilize; remaining excess "
                                  + detail::fmt_double(total_excess),
                              total_excess);
    }
    return st;
}

//---------------------------------------------------------------------------//
SandpileCluster cluster(MatedCrtMap const& map,
                        SandpileState const& state,
                        double v_tol,
                        double mass_tol)
{
    v_tol = resolve_tol(v_tol, state.T);
    mass_tol = resolve_tol(mass_tol, state.T);
    std::size_t const n = map.vertex_count();
    SandpileCluster c;
    c.toppled.assign(n, 0);
    c.closure.assign(n, 0);
    if (state.T == 0.0)
        return c;
    for (Vertex v = 0; v < n; ++v)
    {
        if (state.odometer[v] > v_tol)
        {
            c.toppled[v] = 1;
            ++c.toppled_count;
            c.closure[v] = 1;
            for (auto const& e : map.ends(v))
                c.closure[e.to] = 1;
        }
        if (state.mass[v] > mass_tol)
            c.closure[v] = 1;
    }
    c.closure_count = static_cast<std::size_t>(
        std::count(c.closure.begin(), c.closure.end(), 1));
    return c;
}

double structure_residual(MatedCrtMap const& map, SandpileState const& state)
{
    double worst = 0;
    for (Vertex a = 0; a < map.vertex_count(); ++a)
    {
        // deg(a) * Lap(v/deg)(a) = sum_b v(b)/deg(b) - v(a)
        double flow = -state.odometer[a];
        for (auto const& e : map.ends(a))
            flow += state.odometer[e.to] / map.degree(e.to);
        double const expect = (a == state.source ? state.T : 0.0) + flow;
        worst = std::max(worst, std::abs(state.mass[a] - expect));
    }
    return worst;
}

double mean_value_residual(MatedCrtMap const& map,
                           SandpileState const& state,
                           std::span<double const> h,
                           double v_tol,
                           double harmonic_tol)
{
    std::size_t const n = map.vertex_count();
    if (h.size() != n)
        throw DomainError("test field size does not match the map");
    v_tol = resolve_tol(v_tol, state.T);
    double hmax = 0;
    for (Vertex a = 0; a < n; ++a)
        if (state.mass[a] > 0 || state.odometer[a] > 0)
            hmax = std::max(hmax, std::abs(h[a]));
    for (Vertex a = 0; a < n; ++a)
    {
        if (!(state.odometer[a] > v_tol))
            continue;
        double const lap = laplacian_apply(map, h, a);
        if (std::abs(lap) > harmonic_tol * std::max(hmax, 1e-300))
            throw DomainError("test field is not harmonic at toppled vertex "
                              + std::to_string(a) + " (Laplacian "
                              + detail::fmt_double(lap) + ")");
    }
    double sum = 0;
    for (Vertex a = 0; a < n; ++a)
        if (state.mass[a] != 0.0)
            sum += h[a] * state.mass[a];
    return std::abs(sum - state.T * h[state.source]);
}

void write_sandpile_csv(SandpileState const& state, std::ostream& os)
{
    os << "vertex,mass,odometer\n";
    for (std::size_t v = 0; v < state.mass.size(); ++v)
        os << v << ',' << detail::fmt_double(state.mass[v]) << ','
           << detail::fmt_double(state.odometer[v]) << '\n';
}

//---------------------------------------------------------------------------//
// Obstacle problem
//---------------------------------------------------------------------------//
double complementarity_residual(Domain const& domain,
                                std::span<double const> threshold,
                                std::span<double const> phi,
                                std::span<double const> w)
{
    auto const& map = domain.map();
    double worst = 0;
    for (Vertex a : domain.interior())
    {
        double const slack = threshold[a] - laplacian_apply(map, w, a);
        double const gap = w[a] - phi[a];
        worst = std::max(worst, std::abs(std::min(slack, gap)));
    }
    return worst;
}

ObstacleSolution solve_obstacle(Domain const& domain,
                                std::span<double const> threshold,
                                double t,
                                Vertex source,
                                ObstacleConfig const& config)
{
    auto const& map = domain.map();
    std::size_t const n = map.vertex_count();
    if (threshold.size() != n)
        throw DomainError("threshold field size does not match the map");
    if (source >= n || !domain.is_interior(source))
        throw DomainError("obstacle source must be an interior vertex");
    if (!(t >= 0) || !std::isfinite(t))
        throw DomainError("obstacle strength must be finite and >= 0");
    for (Vertex a : domain.interior())
        if (!(threshold[a] > 0))
            throw DomainError("threshold must be positive on the interior");

    ObstacleSolution sol;
    sol.threshold.assign(threshold.begin(), threshold.end());
    sol.t = t;
    sol.source = source;
    sol.phi.assign(n, 0.0);
    sol.cluster.assign(n, 0);

    if (t > 0)
    {
        auto green = greens_column(domain, source, config.solver);
        for (Vertex a = 0; a < n; ++a)
            sol.phi[a] = -t * green.G[a];
    }
    {
        VertexField zero(n, 0.0);
        sol.q = solve_dirichlet(domain, zero, threshold, config.bound_solver);
    }
    for (Vertex a = 0; a < n; ++a)
        if (!domain.in_closure(a))
        {
            sol.phi[a] = std::nan("");
            sol.q[a] = std::nan("");
        }

    // Projected Gauss-Seidel from below: w only increases. Only vertices
    // whose neighbourhood moved are revisited.
    auto& w = sol.w;
    w = sol.phi;
    auto const& phi = sol.phi;
    double scale = 1.0;
    for (Vertex a : domain.interior())
        scale = std::max(scale, std::abs(phi[a]));
    double const tol = config.tolerance * scale;
    double const wake = tol * 1e-3;
    auto update = [&](Vertex a) {
        double sum = 0;
        for (auto const& e : map.ends(a))
            sum += w[e.to];
        return std::max(phi[a], sum / map.degree(a) - threshold[a]);
    };
    std::vector<char> queued(n, 0);
    std::vector<Vertex> active;
    std::vector<Vertex> next;
    for (Vertex a : domain.interior())
    {
        active.push_back(a);
        queued[a] = 1;
    }
    while (true)
    {
        while (!active.empty())
        {
            if (sol.sweeps++ >= config.max_sweeps)
            {
                double res = complementarity_residual(domain, threshold, phi, w);
                throw SolverError("obstacle relaxation did not converge; "
                                  "complementarity residual "
                                      + detail::fmt_double(res),
                                  res);
            }
            std::sort(active.begin(), active.end());
            for (Vertex a : active)
                queued[a] = 0;
            for (Vertex a : active)
            {
                double const nw = update(a);
                if (!(nw > w[a]))
                    continue;
                double const delta = nw - w[a];
                w[a] = nw;
                if (delta <= wake)
                    continue;
                for (auto const& e : map.ends(a))
                {
                    if (domain.is_interior(e.to) && !queued[e.to])
                    {
                        queued[e.to] = 1;
                        next.push_back(e.to);
                    }
                }
            }
            active.swap(next);
            next.clear();
        }
        sol.complementarity = complementarity_residual(domain, threshold, phi, w);
        if (sol.complementarity <= tol)
            break;
        // Residual left by sub-threshold moves; wake the offenders.
        for (Vertex a : domain.interior())
        {
            double const slack = threshold[a] - laplacian_apply(map, w, a);
            if (std::abs(std::min(slack, w[a] - phi[a])) > tol)
            {
                active.push_back(a);
                queued[a] = 1;
            }
        }
        if (active.empty())
            throw SolverError("obstacle relaxation stalled; complementarity "
                              "residual "
                                  + detail::fmt_double(sol.complementarity),
                              sol.complementarity);
        if (sol.sweeps >= config.max_sweeps)
            throw SolverError("obstacle relaxation did not converge; "
                              "complementarity residual "
                                  + detail::fmt_double(sol.complementarity),
                              sol.complementarity);
    }

    double const ctol = config.cluster_tol > 0
                            ? config.cluster_tol
                            : 1e-9 * std::max(t * map.degree(source), 1e-300);
    for (Vertex a : domain.interior())
    {
        if (w[a] - phi[a] > ctol)
        {
            sol.cluster[a] = 1;
            ++sol.cluster_count;
        }
    }
    return sol;
}

}  // namespace mcrt
