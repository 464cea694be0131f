//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/walk.hpp
//! Simple random walk on the multigraph.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "maps.hpp"
#include "rng.hpp"

namespace mcrt
{
//---------------------------------------------------------------------------//
//! Sentinel for "never visited".
inline constexpr std::uint64_t never = std::numeric_limits<std::uint64_t>::max();

struct WalkResult
{
    Vertex stopped_at{};
    std::uint64_t steps{0};
    std::vector<Vertex> trace;  //!< start, then one vertex per step
};

/*!
 * Default step budget: 100 times a crude bound n (1 + ln n) on the largest
 * expected exit time of an n-vertex map.
 */
std::uint64_t default_max_steps(MatedCrtMap const& map);

//! One step: a uniformly random edge end of the current vertex.
inline Vertex random_step(MatedCrtMap const& map, Vertex v, CounterRng& rng)
{
    auto ends = map.ends(v);
    return ends[rng.below(static_cast<std::uint32_t>(ends.size()))].to;
}

//---------------------------------------------------------------------------//
/*!
 * Walk from start until stop(vertex) holds; stop(start) is checked first.
 *
 * Throws TimeoutError (with the walker's current vertex and step count)
 * if max_steps steps pass without stopping.
 */
template<class Stop>
WalkResult walk_until(MatedCrtMap const& map,
                      Vertex start,
                      Stop&& stop,
                      WalkerStream& stream,
                      std::uint64_t max_steps,
                      bool record_trace = false)
{
    WalkResult res;
    Vertex v = start;
    if (record_trace)
        res.trace.push_back(v);
    while (!stop(v))
    {
        if (res.steps >= max_steps || map.degree(v) == 0)
        {
            throw TimeoutError("walker " + std::to_string(stream.walker)
                                   + " exceeded " + std::to_string(max_steps)
                                   + " steps",
                               v,
                               res.steps);
        }
        v = random_step(map, v, stream.rng);
        ++res.steps;
        if (record_trace)
            res.trace.push_back(v);
    }
    res.stopped_at = v;
    return res;
}

//---------------------------------------------------------------------------//
/*!
 * Run independent walkers 0..n_walkers-1 from start until stop, and return
 * per vertex the smallest step index at which any walker first visited it
 * (`never` if unvisited).
 *
 * Walker w uses WalkerStream(base_seed, w), so the result does not depend on
 * the thread count.
 */
template<class Stop>
std::vector<std::uint64_t> first_hit_times(MatedCrtMap const& map,
                                           Vertex start,
                                           Stop const& stop,
                                           std::uint64_t n_walkers,
                                           std::uint64_t base_seed,
                                           std::uint64_t max_steps,
                                           unsigned threads = 1)
{
    std::size_t const n = map.vertex_count();
    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> local(
        threads, std::vector<std::uint64_t>(n, never));
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](unsigned tid) {
        try
        {
            auto& best = local[tid];
            for (std::uint64_t w = tid; w < n_walkers; w += threads)
            {
                WalkerStream stream(base_seed, w);
                Vertex v = start;
                std::uint64_t t = 0;
                best[v] = std::min(best[v], t);
                while (!stop(v))
                {
                    if (t >= max_steps || map.degree(v) == 0)
                        throw TimeoutError("walker " + std::to_string(w)
                                               + " exceeded step budget",
                                           v,
                                           t);
                    v = random_step(map, v, stream.rng);
                    ++t;
                    best[v] = std::min(best[v], t);
                }
            }
        }
        catch (...)
        {
            errors[tid] = std::current_exception();
        }
    };

    if (threads == 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<std::uint64_t> out(n, never);
    for (auto const& best : local)
        for (std::size_t v = 0; v < n; ++v)
            out[v] = std::min(out[v], best[v]);
    return out;
}

//---------------------------------------------------------------------------//
//! Write a walk trace as CSV (step,vertex).
void write_trace_csv(std::vector<Vertex> const& trace, std::ostream& os);

}  // namespace mcrt
