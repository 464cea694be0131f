//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/idla.cpp
//---------------------------------------------------------------------------//
#include "mcrt/idla.hpp"

#include <algorithm>
#include <ostream>

#include "mcrt/error.hpp"
#include "mcrt/walk.hpp"

namespace mcrt
{
namespace
{
IdlaState empty_state(std::size_t n)
{
    IdlaState s;
    s.occupied.assign(n, 0);
    s.hit_time.assign(n, never);
    return s;
}

enum class Outcome
{
    absorbed,
    paused
};

// One walker from start. stop_region empty means unrestricted.
template<class Visit>
Outcome release_walker(MatedCrtMap const& map,
                       IdlaState& state,
                       Vertex start,
                       std::span<char const> stop_region,
                       std::uint64_t base_seed,
                       std::uint64_t max_steps,
                       Visit&& on_visit)
{
    WalkerStream stream(base_seed, state.walkers_emitted++);
    Vertex v = start;
    std::uint64_t steps = 0;
    for (;;)
    {
        if (state.hit_time[v] == never)
            state.hit_time[v] = state.clock;
        on_visit(v);
        if (!stop_region.empty() && !stop_region[v])
        {
            state.paused.push_back(v);
            return Outcome::paused;
        }
        if (!state.occupied[v])
        {
            state.occupied[v] = 1;
            state.absorbed_order.push_back(v);
            return Outcome::absorbed;
        }
        if (steps >= max_steps || map.degree(v) == 0)
        {
            throw TimeoutError("IDLA walker " + std::to_string(stream.walker)
                                   + " exceeded " + std::to_string(max_steps)
                                   + " steps (domain too small?)",
                               v,
                               steps);
        }
        v = random_step(map, v, stream.rng);
        ++steps;
        ++state.clock;
    }
}

std::uint64_t budget(MatedCrtMap const& map, std::uint64_t max_steps)
{
    return max_steps ? max_steps : default_max_steps(map);
}

void check_vertex(MatedCrtMap const& map, Vertex v, char const* what)
{
    if (v >= map.vertex_count())
        throw DomainError(std::string(what) + " vertex out of range");
}

}  // namespace

//---------------------------------------------------------------------------//
std::size_t IdlaState::occupied_count() const
{
    return static_cast<std::size_t>(
        std::count(occupied.begin(), occupied.end(), 1));
}

std::vector<Vertex> IdlaState::occupied_vertices() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < occupied.size(); ++v)
        if (occupied[v])
            out.push_back(v);
    return out;
}

IdlaState run_idla(MatedCrtMap const& map,
                   std::uint64_t n_walkers,
                   Vertex source,
                   std::uint64_t base_seed,
                   std::uint64_t max_steps)
{
    check_vertex(map, source, "source");
    IdlaState s = empty_state(map.vertex_count());
    auto const limit = budget(map, max_steps);
    for (std::uint64_t i = 0; i < n_walkers; ++i)
        release_walker(map, s, source, {}, base_seed, limit, [](Vertex) {});
    return s;
}

IdlaState run_idla_stopped(MatedCrtMap const& map,
                           std::span<Vertex const> initial,
                           std::span<Vertex const> sources,
                           std::span<char const> stop_region,
                           std::uint64_t base_seed,
                           std::uint64_t max_steps)
{
    std::size_t const n = map.vertex_count();
    if (stop_region.size() != n)
        throw DomainError("stop region mask must cover every vertex");
    IdlaState s = empty_state(n);
    for (Vertex v : initial)
    {
        check_vertex(map, v, "initial");
        if (!stop_region[v])
            throw DomainError("initial set must lie inside the stop region");
        s.occupied[v] = 1;
    }
    for (Vertex a : sources)
    {
        check_vertex(map, a, "source");
        if (!s.occupied[a])
            throw DomainError("walker sources must lie in the initial set");
    }
    auto const limit = budget(map, max_steps);
    for (Vertex a : sources)
        release_walker(map, s, a, stop_region, base_seed, limit, [](Vertex) {});
    return s;
}

IdlaState resume(MatedCrtMap const& map,
                 IdlaState state,
                 std::uint64_t base_seed,
                 std::uint64_t max_steps)
{
    auto const limit = budget(map, max_steps);
    std::vector<Vertex> pending;
    pending.swap(state.paused);
    for (Vertex p : pending)
    {
        check_vertex(map, p, "paused");
        release_walker(map, state, p, {}, base_seed, limit, [](Vertex) {});
    }
    return state;
}

BoundaryRun run_idla_until_boundary(MatedCrtMap const& map,
                                    Vertex source,
                                    std::uint64_t base_seed,
                                    std::uint64_t max_walkers,
                                    std::uint64_t max_steps)
{
    check_vertex(map, source, "source");
    BoundaryRun run;
    run.state = empty_state(map.vertex_count());
    auto const limit = budget(map, max_steps);
    bool hit = false;
    auto watch = [&](Vertex v) { hit = hit || map.is_boundary(v); };
    for (std::uint64_t i = 0; i < max_walkers && !hit; ++i)
        release_walker(map, run.state, source, {}, base_seed, limit, watch);
    run.reached_boundary = hit;
    return run;
}

void write_idla_csv(IdlaState const& state, std::ostream& os)
{
    os << "vertex,occupied,hit_time\n";
    for (std::size_t v = 0; v < state.occupied.size(); ++v)
    {
        os << v << ',' << int(state.occupied[v] != 0) << ',';
        if (state.hit_time[v] != never)
            os << state.hit_time[v];
        os << '\n';
    }
}

}  // namespace mcrt
