//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/pathgen.hpp
//! Correlated Brownian path pairs on a uniform mesh.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcrt
{
//---------------------------------------------------------------------------//
/*!
 * Two Brownian coordinates (L, R) sampled at times 0, mesh, 2*mesh, ...
 *
 * Cell k (1-based, k = 1..n_cells) is the time interval
 * [(k-1)*mesh, k*mesh] and owns samples k-1 and k.
 */
struct PathPair
{
    double gamma{0};
    double mesh{0};
    std::size_t n_cells{0};
    std::uint64_t seed{0};
    std::vector<double> L;
    std::vector<double> R;

    //! Increment correlation -cos(pi gamma^2 / 4).
    double correlation() const;

    //! Throws DomainError unless the struct invariants hold.
    void validate() const;
};

//! Correlation coefficient for a given gamma in (0, 2).
double correlation_for_gamma(double gamma);

//---------------------------------------------------------------------------//
/*!
 * Sample a path pair deterministically from a seed.
 *
 * Each increment is sqrt(mesh) * S * (z1, z2) with (z1, z2) independent
 * standard normals and S the lower Cholesky factor of [[1, rho], [rho, 1]].
 * The normals depend on the seed only, so changing mesh rescales the paths.
 */
PathPair sample_correlated_paths(double gamma,
                                 double mesh,
                                 std::size_t n_cells,
                                 std::uint64_t seed);

//---------------------------------------------------------------------------//
// Serialization
//
// Binary layout (all little-endian):
//   char[4]  magic "MCRP"
//   u32      format version (= 1)
//   f64      gamma
//   f64      mesh
//   u64      n_cells
//   u64      seed
//   f64[n_cells + 1]  L
//   f64[n_cells + 1]  R
//---------------------------------------------------------------------------//
inline constexpr std::uint32_t path_format_version = 1;

void write_path_binary(PathPair const& path, std::ostream& os);
PathPair read_path_binary(std::istream& is);
void write_path_csv(PathPair const& path, std::ostream& os);

void save_path(PathPair const& path, std::string const& filename);
PathPair load_path(std::string const& filename);

//---------------------------------------------------------------------------//
}  // namespace mcrt
