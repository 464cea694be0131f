//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/map_io.cpp
//---------------------------------------------------------------------------//
#include "mcrt/map_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcrt/error.hpp"
#include "io_util.hpp"

namespace mcrt
{
namespace
{
std::vector<std::vector<EdgeEnd>>
rotation_from_ids(MatedCrtMap const& map,
                  std::vector<std::vector<std::uint32_t>> const& ids)
{
    std::vector<std::vector<EdgeEnd>> rot(ids.size());
    for (Vertex v = 0; v < ids.size(); ++v)
    {
        for (auto e : ids[v])
        {
            if (e >= map.edge_count())
                throw StructuralError("rotation references unknown edge "
                                      + std::to_string(e));
            Edge const& ed = map.edges()[e];
            if (ed.u != v && ed.v != v)
                throw StructuralError("rotation of vertex " + std::to_string(v)
                                      + " lists a foreign edge");
            rot[v].push_back({ed.u == v ? ed.v : ed.u, e});
        }
    }
    return rot;
}

bool has_extension(std::string const& name, std::string const& ext)
{
    return name.size() >= ext.size()
           && name.compare(name.size() - ext.size(), ext.size(), ext) == 0;
}

EdgeTag tag_from_code(int code)
{
    if (code < 0 || code > 2)
        throw StructuralError("invalid edge tag " + std::to_string(code));
    return static_cast<EdgeTag>(code);
}

}  // namespace

//---------------------------------------------------------------------------//
void write_map_binary(MatedCrtMap const& map, std::ostream& os)
{
    os.write("MCRM", 4);
    detail::write_le<std::uint8_t>(os, map_format_version);
    std::uint8_t flags = (map.has_rotation() ? 1 : 0)
                         | (map.has_boundary() ? 2 : 0);
    detail::write_le<std::uint8_t>(os, flags);
    detail::write_le<std::uint16_t>(os, 0);
    detail::write_le<std::uint64_t>(os, map.vertex_count());
    detail::write_le<std::uint64_t>(os, map.edge_count());
    for (Edge const& e : map.edges())
    {
        detail::write_le<std::uint32_t>(os, e.u);
        detail::write_le<std::uint32_t>(os, e.v);
        detail::write_le<std::uint8_t>(os, static_cast<std::uint8_t>(e.tag));
    }
    if (map.has_rotation())
    {
        for (Vertex v = 0; v < map.vertex_count(); ++v)
        {
            detail::write_le<std::uint32_t>(os, map.degree(v));
            for (EdgeEnd const& e : map.ends(v))
                detail::write_le<std::uint32_t>(os, e.edge);
        }
    }
    if (map.has_boundary())
    {
        for (char b : map.boundary_mask())
            detail::write_le<std::uint8_t>(os, b ? 1 : 0);
    }
    if (!os)
        throw IoError("failed to write map");
}

MatedCrtMap read_map_binary(std::istream& is)
{
    try
    {
        char magic[4] = {};
        is.read(magic, 4);
        if (!is || std::string(magic, 4) != "MCRM")
            throw StructuralError("not a map file (bad magic)");
        auto version = detail::read_le<std::uint8_t>(is);
        if (version != map_format_version)
            throw StructuralError("unsupported map format version "
                                  + std::to_string(version));
        auto flags = detail::read_le<std::uint8_t>(is);
        detail::read_le<std::uint16_t>(is);
        auto n = detail::read_le<std::uint64_t>(is);
        auto m = detail::read_le<std::uint64_t>(is);
        if (n == 0 || n > (1ULL << 31) || m > 8 * n)
            throw StructuralError("map header has implausible sizes");
        std::vector<Edge> edges(m);
        for (Edge& e : edges)
        {
            e.u = detail::read_le<std::uint32_t>(is);
            e.v = detail::read_le<std::uint32_t>(is);
            e.tag = tag_from_code(detail::read_le<std::uint8_t>(is));
        }
        MatedCrtMap map = MatedCrtMap::from_edges(n, std::move(edges));
        if (flags & 1)
        {
            std::vector<std::vector<std::uint32_t>> ids(n);
            for (auto& r : ids)
            {
                auto deg = detail::read_le<std::uint32_t>(is);
                if (deg > 2 * m)
                    throw StructuralError("rotation degree out of range");
                r.resize(deg);
                for (auto& e : r)
                    e = detail::read_le<std::uint32_t>(is);
            }
            map.set_rotation(rotation_from_ids(map, ids));
        }
        if (flags & 2)
        {
            std::vector<char> mask(n);
            for (char& b : mask)
                b = detail::read_le<std::uint8_t>(is) ? 1 : 0;
            map.set_boundary(std::move(mask));
        }
        validate_structure(map);
        return map;
    }
    catch (IoError const& e)
    {
        throw StructuralError(std::string("corrupt map file: ") + e.what());
    }
}

std::string map_to_json(MatedCrtMap const& map)
{
    nlohmann::json j;
    j["format"] = "mcrt-map";
    j["format_version"] = map_format_version;
    j["n"] = map.vertex_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (Edge const& e : map.edges())
        edges.push_back({e.u, e.v, to_string(e.tag)});
    if (map.has_rotation())
    {
        auto& rot = j["rotation"] = nlohmann::json::array();
        for (Vertex v = 0; v < map.vertex_count(); ++v)
        {
            auto r = nlohmann::json::array();
            for (EdgeEnd const& e : map.ends(v))
                r.push_back(e.edge);
            rot.push_back(std::move(r));
        }
    }
    if (map.has_boundary())
        j["boundary"] = map.boundary_vertices();
    return j.dump();
}

MatedCrtMap map_from_json(std::string const& text)
{
    try
    {
        auto j = nlohmann::json::parse(text);
        if (j.value("format", "") != "mcrt-map")
            throw StructuralError("not a map document");
        if (!j.contains("format_version")
            || j["format_version"].get<int>() != map_format_version)
            throw StructuralError("missing or unsupported format_version");
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        for (auto const& e : j.at("edges"))
        {
            auto tag = e.at(2).get<std::string>();
            EdgeTag t = tag == "L"   ? EdgeTag::L
                        : tag == "R" ? EdgeTag::R
                        : tag == "C" ? EdgeTag::consecutive
                                     : throw StructuralError("bad edge tag "
                                                             + tag);
            edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>(), t});
        }
        MatedCrtMap map = MatedCrtMap::from_edges(n, std::move(edges));
        if (j.contains("rotation"))
        {
            auto ids = j["rotation"].get<std::vector<std::vector<std::uint32_t>>>();
            if (ids.size() != n)
                throw StructuralError("rotation must list every vertex");
            map.set_rotation(rotation_from_ids(map, ids));
        }
        if (j.contains("boundary"))
        {
            std::vector<char> mask(n, 0);
            for (auto v : j["boundary"].get<std::vector<Vertex>>())
            {
                if (v >= n)
                    throw StructuralError("boundary vertex out of range");
                mask[v] = 1;
            }
            map.set_boundary(std::move(mask));
        }
        validate_structure(map);
        return map;
    }
    catch (nlohmann::json::exception const& e)
    {
        throw StructuralError(std::string("corrupt map document: ") + e.what());
    }
}

void save_map(MatedCrtMap const& map, std::string const& filename)
{
    if (has_extension(filename, ".json"))
    {
        detail::write_text_file(filename, map_to_json(map));
        return;
    }
    std::ofstream os(filename, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + filename + " for writing");
    write_map_binary(map, os);
}

MatedCrtMap load_map(std::string const& filename)
{
    if (has_extension(filename, ".json"))
        return map_from_json(detail::read_text_file(filename));
    std::ifstream is(filename, std::ios::binary);
    if (!is)
        throw IoError("cannot open " + filename);
    return read_map_binary(is);
}

}  // namespace mcrt
