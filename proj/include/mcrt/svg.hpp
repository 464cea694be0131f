//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/svg.hpp
//! Deterministic SVG drawings of embedded maps.
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <string>

#include "embed.hpp"

namespace mcrt
{
//! Bumped whenever the drawing changes for identical inputs.
inline constexpr char const svg_style_version[] = "mcrt-svg-1";

struct SvgOptions
{
    int size{800};
    double margin{16};
    double marker_radius{1.6};
    bool draw_edges{true};
    std::string title;
};

/*!
 * Draw the inner faces of the embedding.
 *
 * A face is filled according to the smallest non-NaN value among its
 * vertices (viridis scale over the range of those values) or light grey if
 * all are NaN. Each vertex with a nonzero marker gets one circle of class
 * "cluster-vertex".
 */
std::string render_svg(MatedCrtMap const& map,
                       Embedding const& emb,
                       std::span<double const> value,
                       std::span<char const> markers,
                       SvgOptions const& options = {});

}  // namespace mcrt
