//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_potential.cpp
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "graphs.hpp"
#include "mcrt/error.hpp"
#include "mcrt/maps.hpp"
#include "mcrt/pathgen.hpp"
#include "mcrt/potential.hpp"
#include "oracles.hpp"

using namespace mcrt;

namespace
{
MatedCrtMap test_map(std::size_t n, std::uint64_t seed)
{
    return generate_map(sample_correlated_paths(1.0, 1.0 / n, n, seed));
}

double sup_diff(std::vector<double> const& a, std::vector<double> const& b)
{
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}
}  // namespace

TEST_CASE("star: one-step exit")
{
    auto m = graphs::star(5);
    auto dom = window_interior(m);
    auto g = greens_column(dom, 0);
    CHECK(g.G[0] == doctest::Approx(1.0));
    CHECK(g.kernel[0] == doctest::Approx(0.2));
    auto ex = expected_exit_times(dom);
    CHECK(ex.Q[0] == doctest::Approx(1.0));
    CHECK(ex.q[0] == doctest::Approx(0.2));
    CHECK_THROWS_AS(greens_column(dom, 1), DomainError);
}

TEST_CASE("laplacian of constants vanishes")
{
    auto m = test_map(300, 1);
    std::vector<double> c(300, 3.5);
    for (double x : laplacian(m, c))
        CHECK(x == 0.0);
}

TEST_CASE("Dirichlet solve matches a dense LU oracle")
{
    auto m = test_map(400, 2);
    auto dom = window_interior(m);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> data(400, 0.0), rhs(400, 0.0);
    for (Vertex v : dom.boundary())
        data[v] = u(gen);
    for (Vertex v : dom.interior())
        rhs[v] = u(gen) * 0.01;
    for (auto method : {SolverMethod::conjugate_gradient, SolverMethod::gauss_seidel})
    {
        SolverConfig cfg{1e-12, 0, method};
        SolveStats stats;
        auto f = solve_dirichlet(dom, data, rhs, cfg, &stats);
        auto ref = oracle::dense_dirichlet(dom, data, rhs);
        CHECK(sup_diff(f, ref) < 1e-8);
        CHECK(stats.relative_residual <= 1e-12);
        for (Vertex v : dom.interior())
            CHECK(std::abs(laplacian_apply(m, f, v) - rhs[v]) < 1e-9);
    }
}

TEST_CASE("Green columns match the dense Green matrix and are symmetric")
{
    auto m = test_map(300, 4);
    auto dom = window_interior(m);
    auto G = oracle::dense_green(dom);
    auto interior = dom.interior();
    SolverConfig cfg{1e-12};
    for (std::size_t j : {std::size_t{0}, interior.size() / 2, interior.size() - 1})
    {
        auto col = greens_column(dom, interior[j], cfg);
        for (std::size_t i = 0; i < interior.size(); ++i)
            CHECK(col.G[interior[i]] == doctest::Approx(G(i, j)).epsilon(1e-9));
    }
    auto a = interior[3], b = interior[interior.size() - 4];
    auto ga = greens_column(dom, a, cfg);
    auto gb = greens_column(dom, b, cfg);
    CHECK(std::abs(ga.kernel[b] - gb.kernel[a]) <= 1e-10 * ga.kernel[b]);
}

TEST_CASE("exit times equal summed Green columns")
{
    auto m = test_map(200, 5);
    auto dom = window_interior(m);
    auto G = oracle::dense_green(dom);
    auto ex = expected_exit_times(dom, {1e-12});
    auto interior = dom.interior();
    for (std::size_t i = 0; i < interior.size(); ++i)
    {
        double row = 0, q = 0;
        for (std::size_t j = 0; j < interior.size(); ++j)
        {
            row += G(i, j);
            q += G(i, j) / m.degree(interior[j]);
        }
        CHECK(ex.Q[interior[i]] == doctest::Approx(row).epsilon(1e-9));
        CHECK(ex.q[interior[i]] == doctest::Approx(q).epsilon(1e-9));
    }
}

TEST_CASE("maximum principle for harmonic extensions")
{
    auto m = test_map(500, 6);
    auto dom = window_interior(m);
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(-2, 3);
    std::vector<double> data(500, 0.0), zero(500, 0.0);
    double lo = 1e300, hi = -1e300;
    for (Vertex v : dom.boundary())
    {
        data[v] = u(gen);
        lo = std::min(lo, data[v]);
        hi = std::max(hi, data[v]);
    }
    auto h = solve_dirichlet(dom, data, zero, {1e-12});
    for (Vertex v : dom.interior())
    {
        CHECK(h[v] >= lo - 1e-10);
        CHECK(h[v] <= hi + 1e-10);
    }
}

TEST_CASE("divergence pairing is symmetric for finitely supported fields")
{
    auto m = test_map(1000, 7);
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> f(1000, 0.0), g(1000, 0.0);
    for (Vertex v = 100; v < 300; ++v)
        f[v] = u(gen);
    for (Vertex v = 250; v < 600; ++v)
        g[v] = u(gen);
    auto p = divergence_pairing(m, f, g);
    CHECK(std::abs(p.lhs - p.rhs) <= 1e-9 * p.scale);
    CHECK_THROWS_AS(divergence_pairing(m, f, std::vector<double>(3)), DomainError);
}

TEST_CASE("solver iteration cap raises a solver error")
{
    auto m = test_map(500, 8);
    auto dom = window_interior(m);
    std::vector<double> data(500, 1.0), zero(500, 0.0);
    for (Vertex v : dom.interior())
        data[v] = 0.0;
    // Nonzero boundary data so that one iteration cannot converge.
    auto b = dom.boundary();
    for (std::size_t i = 0; i < b.size(); i += 2)
        data[b[i]] = -1.0;
    SolverConfig cfg{1e-14, 1, SolverMethod::conjugate_gradient};
    CHECK_THROWS_AS(solve_dirichlet(dom, data, zero, cfg), SolverError);
}
