//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/potential.hpp
//! Degree-normalized Laplacian, Dirichlet problems, Green's functions.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maps.hpp"

namespace mcrt
{
//---------------------------------------------------------------------------//
//! One real value per map vertex.
using VertexField = std::vector<double>;

enum class SolverMethod
{
    conjugate_gradient,  //!< Jacobi-preconditioned CG on -deg * Laplacian
    gauss_seidel,
};

struct SolverConfig
{
    //! Stop when ||b - A x||_inf <= tolerance * ||b||_inf for the SPD system
    //! A = deg * (-Laplacian) restricted to the interior.
    double tolerance{1e-10};
    //! Zero selects 20 * |interior| + 1000 (GS: 2000 * |interior| + 10^5).
    std::size_t max_iterations{0};
    SolverMethod method{SolverMethod::conjugate_gradient};
};

struct SolveStats
{
    std::size_t iterations{0};
    double relative_residual{0};
};

//---------------------------------------------------------------------------//
/*!
 * (1/deg(a)) * sum over edge ends at a of (u(b) - u(a)).
 *
 * A NaN at a or at any neighbor counts as a missing value (DomainError).
 */
double laplacian_apply(MatedCrtMap const& map,
                       std::span<double const> field,
                       Vertex at);

//! Laplacian at every vertex; missing values are not checked.
VertexField laplacian(MatedCrtMap const& map, std::span<double const> field);

//---------------------------------------------------------------------------//
/*!
 * Solve Laplacian f = rhs on the domain interior with f = boundary_data on
 * the domain boundary.
 *
 * Both inputs are full-size fields; entries outside the region they apply to
 * are ignored. The result is zero outside the domain closure.
 */
VertexField solve_dirichlet(Domain const& domain,
                            std::span<double const> boundary_data,
                            std::span<double const> rhs,
                            SolverConfig const& config = {},
                            SolveStats* stats = nullptr);

//---------------------------------------------------------------------------//
/*!
 * Green's function of walk killed on leaving the domain interior, for a
 * fixed target vertex (the source of the column).
 *
 * G(x) = G_D(x, source) = expected visits to source by walk from x, so
 * Laplacian G = -1{x = source} on the interior. The kernel
 * gr(x) = G_D(x, source) / deg(source) is symmetric in (x, source).
 */
struct GreenColumn
{
    Vertex source{};
    VertexField G;
    VertexField kernel;
};

GreenColumn greens_column(Domain const& domain,
                          Vertex source,
                          SolverConfig const& config = {});

//! Expected exit time Q (Laplacian Q = -1) and its normalized version q
//! (Laplacian q = -1/deg), both zero off the interior.
struct ExitTimes
{
    VertexField Q;
    VertexField q;
};

ExitTimes expected_exit_times(Domain const& domain,
                              SolverConfig const& config = {});

//---------------------------------------------------------------------------//
//! Both sides of sum f * Laplacian(g) * deg = sum g * Laplacian(f) * deg.
struct Pairing
{
    double lhs{0};
    double rhs{0};
    double scale{0};  //!< Sum of absolute values of the lhs terms
};

Pairing divergence_pairing(MatedCrtMap const& map,
                           std::span<double const> f,
                           std::span<double const> g);

//---------------------------------------------------------------------------//
void write_field_csv(std::span<double const> field,
                     std::ostream& os,
                     std::string const& column = "value");

//---------------------------------------------------------------------------//
}  // namespace mcrt
