//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/idla.hpp
//! Internal DLA, including stopped and restarted aggregates.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "maps.hpp"

namespace mcrt
{
//---------------------------------------------------------------------------//
/*!
 * IDLA aggregate.
 *
 * Walkers are numbered in emission order; walker i draws from
 * WalkerStream(base_seed, i). hit_time records, per vertex, the global step
 * clock (cumulative steps of all walkers so far) at its first visit.
 */
struct IdlaState
{
    std::vector<char> occupied;
    std::vector<std::uint64_t> hit_time;
    std::vector<Vertex> paused;          //!< Stopped walkers' positions
    std::vector<Vertex> absorbed_order;  //!< Absorptions in time order
    std::uint64_t walkers_emitted{0};
    std::uint64_t clock{0};

    std::size_t occupied_count() const;
    std::vector<Vertex> occupied_vertices() const;
};

//! Sequential IDLA from an empty aggregate: every walker starts at source.
//! max_steps = 0 selects default_max_steps(map) per walker.
IdlaState run_idla(MatedCrtMap const& map,
                   std::uint64_t n_walkers,
                   Vertex source,
                   std::uint64_t base_seed,
                   std::uint64_t max_steps = 0);

/*!
 * A(initial; sources -> stop_region) together with the paused positions P.
 *
 * The initial set starts fully occupied. Walkers (one per entry of
 * sources, in order) absorb at their first unoccupied vertex inside
 * stop_region, or pause at their first vertex outside it.
 * Requires initial within stop_region and every source in initial.
 */
IdlaState run_idla_stopped(MatedCrtMap const& map,
                           std::span<Vertex const> initial,
                           std::span<Vertex const> sources,
                           std::span<char const> stop_region,
                           std::uint64_t base_seed,
                           std::uint64_t max_steps = 0);

//! Release every paused walker (in order) with no stop region.
IdlaState resume(MatedCrtMap const& map,
                 IdlaState state,
                 std::uint64_t base_seed,
                 std::uint64_t max_steps = 0);

/*!
 * Add walkers from source until the first one that visits a window
 * boundary vertex has been absorbed (or max_walkers have been added).
 */
struct BoundaryRun
{
    IdlaState state;
    bool reached_boundary{false};
};

BoundaryRun run_idla_until_boundary(MatedCrtMap const& map,
                                    Vertex source,
                                    std::uint64_t base_seed,
                                    std::uint64_t max_walkers,
                                    std::uint64_t max_steps = 0);

//! CSV dump: vertex,occupied,hit_time (hit_time empty when never hit).
void write_idla_csv(IdlaState const& state, std::ostream& os);

}  // namespace mcrt
