//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file c_api.cpp
//---------------------------------------------------------------------------//
#include "mcrt/mcrt.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "mcrt/embed.hpp"
#include "mcrt/error.hpp"
#include "mcrt/experiment.hpp"
#include "mcrt/idla.hpp"
#include "mcrt/map_io.hpp"
#include "mcrt/pathgen.hpp"
#include "mcrt/sandpile.hpp"
#include "mcrt/version.hpp"
#include "mcrt/walk.hpp"

struct mcrt_map
{
    mcrt::MatedCrtMap map;
};

struct mcrt_embedding
{
    mcrt::Embedding emb;
};

namespace
{
thread_local std::string last_error;

mcrt_status fail(mcrt_status s, char const* what)
{
    last_error = what;
    return s;
}

template<class F>
mcrt_status guarded(F&& f)
{
    last_error.clear();
    try
    {
        return f();
    }
    catch (mcrt::Error const& e)
    {
        return fail(static_cast<mcrt_status>(static_cast<int>(e.kind())), e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(MCRT_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(MCRT_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(MCRT_INTERNAL, "unknown exception");
    }
}

char* dup_string(std::string const& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}
}  // namespace

extern "C" {

const char* mcrt_version(void)
{
    return mcrt::version_string;
}

const char* mcrt_status_name(mcrt_status status)
{
    switch (status)
    {
        case MCRT_OK: return "ok";
        case MCRT_VERIFY_FAILED: return "verify-failed";
        case MCRT_DOMAIN: return "domain";
        case MCRT_STRUCTURAL: return "structural";
        case MCRT_SOLVER: return "solver";
        case MCRT_TIMEOUT: return "timeout";
        case MCRT_OVERFLOW: return "overflow";
        case MCRT_IO: return "io";
        case MCRT_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* mcrt_last_error(void)
{
    return last_error.c_str();
}

mcrt_status mcrt_map_generate(double gamma, uint64_t n_cells, uint64_t seed, mcrt_map** out)
{
    if (!out)
        return fail(MCRT_DOMAIN, "null output handle");
    *out = nullptr;
    return guarded([&] {
        auto path = mcrt::sample_correlated_paths(gamma, 1.0 / static_cast<double>(n_cells),
                                                  n_cells, seed);
        auto h = std::make_unique<mcrt_map>();
        h->map = mcrt::generate_map(path);
        *out = h.release();
        return MCRT_OK;
    });
}

mcrt_status mcrt_map_load(const char* filename, mcrt_map** out)
{
    if (!out || !filename)
        return fail(MCRT_DOMAIN, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<mcrt_map>();
        h->map = mcrt::load_map(filename);
        *out = h.release();
        return MCRT_OK;
    });
}

mcrt_status mcrt_map_save(const mcrt_map* map, const char* filename)
{
    if (!map || !filename)
        return fail(MCRT_DOMAIN, "null argument");
    return guarded([&] {
        mcrt::save_map(map->map, filename);
        return MCRT_OK;
    });
}

void mcrt_map_free(mcrt_map* map)
{
    delete map;
}

uint64_t mcrt_map_vertex_count(const mcrt_map* map)
{
    return map ? map->map.vertex_count() : 0;
}

uint64_t mcrt_map_edge_count(const mcrt_map* map)
{
    return map ? map->map.edge_count() : 0;
}

uint32_t mcrt_map_degree(const mcrt_map* map, uint32_t vertex)
{
    if (!map || vertex >= map->map.vertex_count())
        return 0;
    return map->map.degree(vertex);
}

int mcrt_map_is_boundary(const mcrt_map* map, uint32_t vertex)
{
    if (!map || vertex >= map->map.vertex_count())
        return 0;
    return map->map.is_boundary(vertex) ? 1 : 0;
}

double mcrt_map_mean_degree(const mcrt_map* map)
{
    return map ? map->map.mean_degree() : 0.0;
}

double mcrt_map_boundary_fraction(const mcrt_map* map)
{
    return map ? map->map.boundary_fraction() : 0.0;
}

mcrt_status mcrt_map_edge(const mcrt_map* map, uint64_t e, uint32_t* u, uint32_t* v, int* tag)
{
    if (!map || !u || !v || !tag)
        return fail(MCRT_DOMAIN, "null argument");
    if (e >= map->map.edge_count())
        return fail(MCRT_DOMAIN, "edge index out of range");
    auto const& edge = map->map.edges()[e];
    *u = edge.u;
    *v = edge.v;
    *tag = static_cast<int>(edge.tag);
    return MCRT_OK;
}

uint32_t mcrt_center_vertex(uint64_t n_cells)
{
    return mcrt::center_vertex(n_cells);
}

mcrt_status mcrt_embed(const mcrt_map* map, mcrt_embedding** out)
{
    if (!map || !out)
        return fail(MCRT_DOMAIN, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto h = std::make_unique<mcrt_embedding>();
        h->emb = mcrt::tutte_embed(map->map);
        *out = h.release();
        return MCRT_OK;
    });
}

void mcrt_embedding_free(mcrt_embedding* emb)
{
    delete emb;
}

mcrt_status mcrt_embedding_position(const mcrt_embedding* emb, uint32_t vertex, double* x,
                                    double* y)
{
    if (!emb || !x || !y)
        return fail(MCRT_DOMAIN, "null argument");
    if (vertex >= emb->emb.position.size())
        return fail(MCRT_DOMAIN, "vertex out of range");
    *x = emb->emb.position[vertex].x;
    *y = emb->emb.position[vertex].y;
    return MCRT_OK;
}

double mcrt_embedding_harmonic_residual(const mcrt_embedding* emb)
{
    return emb ? emb->emb.harmonic_residual : 0.0;
}

uint64_t mcrt_embedding_flipped_faces(const mcrt_embedding* emb)
{
    return emb ? emb->emb.flipped_faces : 0;
}

mcrt_status mcrt_idla_run(const mcrt_map* map, uint32_t source, uint64_t walkers, uint64_t seed,
                          uint64_t* hit_time, uint64_t* occupied_count)
{
    if (!map || !hit_time)
        return fail(MCRT_DOMAIN, "null argument");
    return guarded([&] {
        auto st = mcrt::run_idla(map->map, walkers, source, seed);
        for (std::size_t v = 0; v < st.occupied.size(); ++v)
            hit_time[v] = st.occupied[v] ? st.hit_time[v] : mcrt::never;
        if (occupied_count)
            *occupied_count = st.occupied_count();
        return MCRT_OK;
    });
}

mcrt_status mcrt_sandpile_run(const mcrt_map* map, uint32_t source, double mass, mcrt_sweep sweep,
                              uint64_t sweep_seed, double stab_tol, double* final_mass,
                              double* odometer)
{
    if (!map)
        return fail(MCRT_DOMAIN, "null argument");
    return guarded([&] {
        mcrt::SweepPolicy policy{sweep == MCRT_SWEEP_RANDOM
                                     ? mcrt::SweepOrder::random_permutation
                                     : mcrt::SweepOrder::forward,
                                 sweep_seed};
        auto st = mcrt::stabilize(map->map, source, mass, policy, stab_tol);
        if (final_mass)
            std::copy(st.mass.begin(), st.mass.end(), final_mass);
        if (odometer)
            std::copy(st.odometer.begin(), st.odometer.end(), odometer);
        return MCRT_OK;
    });
}

mcrt_status mcrt_command(const char* command, const char* config_path,
                         const char* overrides_json, char** report_json)
{
    if (report_json)
        *report_json = nullptr;
    if (!command)
        return fail(MCRT_DOMAIN, "null command");
    return guarded([&] {
        auto cfg = mcrt::load_config(config_path ? config_path : "",
                                     overrides_json ? overrides_json : "");
        std::string const name = command;
        mcrt::CommandResult res;
        if (name == "generate")
            res = mcrt::cmd_generate(cfg);
        else if (name == "grow")
            res = mcrt::cmd_grow(cfg);
        else if (name == "render")
            res = mcrt::cmd_render(cfg);
        else if (name == "compare")
            res = mcrt::cmd_compare(cfg);
        else if (name == "verify")
            res = mcrt::cmd_verify(cfg);
        else
            throw mcrt::DomainError("unknown command '" + name + "'");
        for (auto const& w : res.warnings)
            std::cerr << "warning: " << w << '\n';
        if (report_json)
            *report_json = dup_string(res.report);
        if (res.exit_code != 0)
            last_error = name + " reported failures";
        return static_cast<mcrt_status>(res.exit_code);
    });
}

void mcrt_string_free(char* s)
{
    std::free(s);
}

}  // extern "C"
