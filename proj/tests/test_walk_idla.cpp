//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_walk_idla.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <doctest.h>

#include "mcrt/error.hpp"
#include "mcrt/idla.hpp"
#include "mcrt/maps.hpp"
#include "mcrt/pathgen.hpp"
#include "mcrt/potential.hpp"
#include "mcrt/walk.hpp"

using namespace mcrt;

namespace
{
MatedCrtMap test_map(std::size_t n, std::uint64_t seed)
{
    return generate_map(sample_correlated_paths(std::sqrt(2.0), 1.0 / n, n, seed));
}
}  // namespace

TEST_CASE("counter generator streams are pure functions of their key")
{
    WalkerStream a(5, 17), b(5, 17), c(5, 18);
    for (int i = 0; i < 100; ++i)
    {
        auto x = a.rng();
        CHECK(x == b.rng());
        CHECK(x != c.rng());
    }
    CounterRng r(derive_key(1, 2));
    for (int i = 0; i < 1000; ++i)
    {
        CHECK(r.below(7) < 7);
        double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("walk stops immediately when the start satisfies the predicate")
{
    auto m = test_map(100, 1);
    WalkerStream s(1, 0);
    auto r = walk_until(m, 50, [](Vertex) { return true; }, s, 10, true);
    CHECK(r.stopped_at == 50);
    CHECK(r.steps == 0);
    CHECK(r.trace == std::vector<Vertex>{50});
}

TEST_CASE("walk step budget raises a timeout carrying the state")
{
    auto m = test_map(100, 1);
    WalkerStream s(1, 0);
    try
    {
        walk_until(m, 50, [](Vertex) { return false; }, s, 25);
        FAIL("expected a timeout");
    }
    catch (TimeoutError const& e)
    {
        CHECK(e.steps() == 25);
        CHECK(e.vertex() < 100);
    }
}

TEST_CASE("one-step frequency across parallel edges")
{
    auto m = test_map(3000, 2);
    // Pick a vertex with a repeated neighbour.
    Vertex v = 0, b = 0;
    std::size_t k = 0;
    for (Vertex x = 0; x < m.vertex_count() && k < 2; ++x)
    {
        std::map<Vertex, std::size_t> mult;
        for (auto const& e : m.ends(x))
            ++mult[e.to];
        for (auto [to, c] : mult)
            if (c >= 2)
            {
                v = x, b = to, k = c;
                break;
            }
    }
    REQUIRE(k >= 2);
    double const p = double(k) / m.degree(v);
    std::size_t const trials = 100'000;
    std::size_t hits = 0;
    WalkerStream s(3, 0);
    for (std::size_t i = 0; i < trials; ++i)
        hits += random_step(m, v, s.rng) == b;
    double const se = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(double(hits) / trials - p) <= 4 * se);
}

TEST_CASE("exit distribution matches harmonic measure")
{
    auto m = test_map(300, 3);
    auto dom = window_interior(m);
    Vertex const start = center_vertex(300);
    REQUIRE(dom.is_interior(start));
    auto boundary = dom.boundary();
    std::size_t const n = m.vertex_count();
    std::vector<double> zero(n, 0.0);
    std::vector<double> hm(n, 0.0);
    for (Vertex b : boundary)
    {
        std::vector<double> data(n, 0.0);
        data[b] = 1.0;
        hm[b] = solve_dirichlet(dom, data, zero, {1e-12})[start];
    }
    std::size_t const walks = 100'000;
    std::vector<double> freq(n, 0.0);
    auto stop = [&](Vertex x) { return !dom.is_interior(x); };
    for (std::size_t w = 0; w < walks; ++w)
    {
        WalkerStream s(11, w);
        auto r = walk_until(m, start, stop, s, default_max_steps(m));
        REQUIRE(dom.is_boundary(r.stopped_at));
        freq[r.stopped_at] += 1.0 / walks;
    }
    double tv = 0, bound = 0;
    for (Vertex b : boundary)
    {
        tv += 0.5 * std::abs(freq[b] - hm[b]);
        bound += 0.5 * std::sqrt(hm[b] * (1 - hm[b]) / walks);
    }
    CAPTURE(tv);
    CAPTURE(bound);
    CHECK(tv <= 4 * bound);
}

TEST_CASE("first hit times do not depend on the thread count")
{
    auto m = test_map(500, 4);
    auto stop = [&](Vertex x) { return m.is_boundary(x); };
    auto a = first_hit_times(m, 250, stop, 40, 9, default_max_steps(m), 1);
    auto b = first_hit_times(m, 250, stop, 40, 9, default_max_steps(m), 3);
    CHECK(a == b);
    CHECK(a[250] == 0);
}

TEST_CASE("IDLA basics")
{
    auto m = test_map(2000, 5);
    Vertex const src = center_vertex(2000);
    auto one = run_idla(m, 1, src, 3);
    CHECK(one.occupied_count() == 1);
    CHECK(one.occupied[src]);
    CHECK(one.hit_time[src] == 0);
    CHECK_THROWS_AS(run_idla(m, 1, 5000, 3), DomainError);

    auto a = run_idla(m, 100, src, 8);
    auto b = run_idla(m, 100, src, 8);
    CHECK(a.occupied == b.occupied);
    CHECK(a.hit_time == b.hit_time);
}

TEST_CASE("IDLA clusters are connected and contain the source")
{
    auto m = test_map(2000, 6);
    Vertex const src = center_vertex(2000);
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
    {
        auto s = run_idla(m, 100, src, seed);
        REQUIRE(s.occupied_count() == 100);
        REQUIRE(s.occupied[src]);
        REQUIRE(is_connected(m, s.occupied));
    }
}

TEST_CASE("stopped IDLA pauses outside the region, resume finishes")
{
    auto m = test_map(1000, 7);
    Vertex const src = center_vertex(1000);
    auto dist = bfs_distances(m, src);
    std::vector<char> region(1000, 0);
    for (Vertex v = 0; v < 1000; ++v)
        region[v] = dist[v] <= 1;
    std::vector<Vertex> initial{src};
    std::vector<Vertex> sources(30, src);
    auto s = run_idla_stopped(m, initial, sources, region, 4);
    CHECK(s.occupied_count() + s.paused.size() == 31);
    for (Vertex v = 0; v < 1000; ++v)
        if (s.occupied[v])
            CHECK(region[v]);
    for (Vertex p : s.paused)
        CHECK_FALSE(region[p]);
    auto done = resume(m, s, 4);
    CHECK(done.paused.empty());
    CHECK(done.occupied_count() == 31);
    CHECK(is_connected(m, done.occupied));

    std::vector<Vertex> outside{static_cast<Vertex>(src + 400)};
    CHECK_THROWS_AS(run_idla_stopped(m, initial, outside, region, 4), DomainError);
}

TEST_CASE("IDLA until boundary")
{
    auto m = test_map(300, 8);
    auto run = run_idla_until_boundary(m, center_vertex(300), 2, 300);
    CHECK(run.reached_boundary);
    CHECK(run.state.occupied_count() <= 300);
    std::stringstream ss;
    write_idla_csv(run.state, ss);
    CHECK(ss.str().rfind("vertex,occupied,hit_time\n", 0) == 0);
}
