//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/pathgen.cpp
//---------------------------------------------------------------------------//
#include "mcrt/pathgen.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "mcrt/error.hpp"
#include "mcrt/rng.hpp"
#include "io_util.hpp"

namespace mcrt
{
double correlation_for_gamma(double gamma)
{
    if (!(gamma > 0.0 && gamma < 2.0))
    {
        throw DomainError("gamma must lie in the open interval (0, 2), got "
                          + std::to_string(gamma));
    }
    return -std::cos(std::numbers::pi * gamma * gamma / 4.0);
}

double PathPair::correlation() const
{
    return correlation_for_gamma(gamma);
}

void PathPair::validate() const
{
    correlation_for_gamma(gamma);
    if (!(mesh > 0.0) || !std::isfinite(mesh))
        throw DomainError("path mesh must be positive");
    if (n_cells == 0)
        throw DomainError("path must have at least one cell");
    if (L.size() != n_cells + 1 || R.size() != n_cells + 1)
        throw DomainError("path arrays must have n_cells + 1 samples");
    if (L[0] != 0.0 || R[0] != 0.0)
        throw DomainError("paths must start at the origin");
    for (std::size_t k = 0; k <= n_cells; ++k)
    {
        if (!std::isfinite(L[k]) || !std::isfinite(R[k]))
            throw DomainError("path samples must be finite");
    }
}

PathPair sample_correlated_paths(double gamma,
                                 double mesh,
                                 std::size_t n_cells,
                                 std::uint64_t seed)
{
    double const rho = correlation_for_gamma(gamma);
    if (!(mesh > 0.0) || !std::isfinite(mesh))
        throw DomainError("mesh must be positive and finite");
    if (n_cells == 0)
        throw DomainError("n_cells must be at least 1");

    PathPair p;
    p.gamma = gamma;
    p.mesh = mesh;
    p.n_cells = n_cells;
    p.seed = seed;
    p.L.resize(n_cells + 1);
    p.R.resize(n_cells + 1);

    CounterRng rng(derive_key(seed, 0x70617468ULL));
    std::normal_distribution<double> normal(0.0, 1.0);
    double const scale = std::sqrt(mesh);
    double const cross = std::sqrt(1.0 - rho * rho);

    double l = 0.0;
    double r = 0.0;
    p.L[0] = 0.0;
    p.R[0] = 0.0;
    for (std::size_t k = 0; k < n_cells; ++k)
    {
        double const z1 = normal(rng);
        double const z2 = normal(rng);
        l += scale * z1;
        r += scale * (rho * z1 + cross * z2);
        p.L[k + 1] = l;
        p.R[k + 1] = r;
    }
    return p;
}

//---------------------------------------------------------------------------//
void write_path_binary(PathPair const& path, std::ostream& os)
{
    path.validate();
    os.write("MCRP", 4);
    detail::write_le<std::uint32_t>(os, path_format_version);
    detail::write_le<double>(os, path.gamma);
    detail::write_le<double>(os, path.mesh);
    detail::write_le<std::uint64_t>(os, path.n_cells);
    detail::write_le<std::uint64_t>(os, path.seed);
    for (double x : path.L)
        detail::write_le<double>(os, x);
    for (double x : path.R)
        detail::write_le<double>(os, x);
    if (!os)
        throw IoError("failed to write path");
}

PathPair read_path_binary(std::istream& is)
{
    char magic[4] = {};
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "MCRP")
        throw IoError("not a path file (bad magic)");
    auto version = detail::read_le<std::uint32_t>(is);
    if (version != path_format_version)
        throw IoError("unsupported path format version "
                      + std::to_string(version));
    PathPair p;
    p.gamma = detail::read_le<double>(is);
    p.mesh = detail::read_le<double>(is);
    p.n_cells = detail::read_le<std::uint64_t>(is);
    p.seed = detail::read_le<std::uint64_t>(is);
    if (p.n_cells == 0 || p.n_cells > (std::uint64_t{1} << 32))
        throw IoError("path file has an invalid cell count");
    p.L.resize(p.n_cells + 1);
    p.R.resize(p.n_cells + 1);
    for (double& x : p.L)
        x = detail::read_le<double>(is);
    for (double& x : p.R)
        x = detail::read_le<double>(is);
    p.validate();
    return p;
}

void write_path_csv(PathPair const& path, std::ostream& os)
{
    os << "k,t,L,R\n";
    for (std::size_t k = 0; k <= path.n_cells; ++k)
    {
        os << k << ',' << detail::fmt_double(static_cast<double>(k) * path.mesh)
           << ',' << detail::fmt_double(path.L[k]) << ','
           << detail::fmt_double(path.R[k]) << '\n';
    }
}

void save_path(PathPair const& path, std::string const& filename)
{
    std::ofstream os(filename, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + filename + " for writing");
    write_path_binary(path, os);
}

PathPair load_path(std::string const& filename)
{
    std::ifstream is(filename, std::ios::binary);
    if (!is)
        throw IoError("cannot open " + filename);
    return read_path_binary(is);
}

}  // namespace mcrt
