//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/map_io.hpp
//! Map serialization.
//
// Binary layout (little-endian):
//   char[4] "MCRM" | u8 version (=1) | u8 flags (bit0 rotation, bit1 boundary)
//   | u16 reserved | u64 n | u64 edge_count
//   | edge_count x { u32 u, u32 v, u8 tag (0=L, 1=R, 2=consecutive) }
//   | if rotation: n x { u32 degree, degree x u32 edge id (ccw order) }
//   | if boundary: n x u8 (0/1)
//
// JSON layout:
//   {"format": "mcrt-map", "format_version": 1, "n": n,
//    "edges": [[u, v, "L"|"R"|"C"], ...],
//    "rotation": [[edge id, ...], ...],     (optional)
//    "boundary": [vertex, ...]}             (optional)
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>

#include "maps.hpp"

namespace mcrt
{
inline constexpr std::uint8_t map_format_version = 1;

void write_map_binary(MatedCrtMap const& map, std::ostream& os);
std::string map_to_json(MatedCrtMap const& map);

//! Readers validate the structure and throw StructuralError on bad content.
MatedCrtMap read_map_binary(std::istream& is);
MatedCrtMap map_from_json(std::string const& text);

//! Dispatch on extension: ".json" is JSON, anything else binary.
void save_map(MatedCrtMap const& map, std::string const& filename);
MatedCrtMap load_map(std::string const& filename);

}  // namespace mcrt
