//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/walk.cpp
//---------------------------------------------------------------------------//
#include "mcrt/walk.hpp"

#include <cmath>
#include <ostream>

namespace mcrt
{
std::uint64_t default_max_steps(MatedCrtMap const& map)
{
    double const n = static_cast<double>(std::max<std::size_t>(map.vertex_count(), 2));
    return static_cast<std::uint64_t>(100.0 * n * (1.0 + std::log(n)));
}

void write_trace_csv(std::vector<Vertex> const& trace, std::ostream& os)
{
    os << "step,vertex\n";
    for (std::size_t i = 0; i < trace.size(); ++i)
        os << i << ',' << trace[i] << '\n';
}

}  // namespace mcrt
