/*---------------------------------------------------------------------------*/
/* Copyright 2026 mcrt developers.                                           */
/* SPDX-License-Identifier: Apache-2.0                                       */
/*---------------------------------------------------------------------------*/
/*! \file mcrt/mcrt.h
 * C interface to the mcrt library.
 *
 * Every function returns an mcrt_status; on failure mcrt_last_error()
 * describes the problem (thread-local, valid until the next call on the
 * same thread). Status values double as CLI exit codes.
 */
#ifndef MCRT_MCRT_H
#define MCRT_MCRT_H

#include <stddef.h>
#include <stdint.h>

#if defined(MCRT_BUILDING_LIBRARY)
#define MCRT_API __attribute__((visibility("default")))
#else
#define MCRT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcrt_status
{
    MCRT_OK = 0,
    MCRT_VERIFY_FAILED = 1, /* a check or trend verdict did not hold */
    MCRT_DOMAIN = 2,        /* bad argument or configuration */
    MCRT_STRUCTURAL = 3,
    MCRT_SOLVER = 4,
    MCRT_TIMEOUT = 5,
    MCRT_OVERFLOW = 6,
    MCRT_IO = 7,
    MCRT_INTERNAL = 8
} mcrt_status;

typedef enum mcrt_sweep
{
    MCRT_SWEEP_FORWARD = 0,
    MCRT_SWEEP_RANDOM = 1
} mcrt_sweep;

typedef struct mcrt_map mcrt_map;
typedef struct mcrt_embedding mcrt_embedding;

MCRT_API const char* mcrt_version(void);
MCRT_API const char* mcrt_status_name(mcrt_status status);
MCRT_API const char* mcrt_last_error(void);

/* Maps */
MCRT_API mcrt_status mcrt_map_generate(double gamma, uint64_t n_cells, uint64_t seed,
                                       mcrt_map** out);
MCRT_API mcrt_status mcrt_map_load(const char* filename, mcrt_map** out);
MCRT_API mcrt_status mcrt_map_save(const mcrt_map* map, const char* filename);
MCRT_API void mcrt_map_free(mcrt_map* map);

MCRT_API uint64_t mcrt_map_vertex_count(const mcrt_map* map);
MCRT_API uint64_t mcrt_map_edge_count(const mcrt_map* map);
MCRT_API uint32_t mcrt_map_degree(const mcrt_map* map, uint32_t vertex);
MCRT_API int mcrt_map_is_boundary(const mcrt_map* map, uint32_t vertex);
MCRT_API double mcrt_map_mean_degree(const mcrt_map* map);
MCRT_API double mcrt_map_boundary_fraction(const mcrt_map* map);
/* Fill u, v, tag (0 = L, 1 = R, 2 = consecutive) for edge index e. */
MCRT_API mcrt_status mcrt_map_edge(const mcrt_map* map, uint64_t e, uint32_t* u, uint32_t* v,
                                   int* tag);
MCRT_API uint32_t mcrt_center_vertex(uint64_t n_cells);

/* Tutte embedding */
MCRT_API mcrt_status mcrt_embed(const mcrt_map* map, mcrt_embedding** out);
MCRT_API void mcrt_embedding_free(mcrt_embedding* emb);
MCRT_API mcrt_status mcrt_embedding_position(const mcrt_embedding* emb, uint32_t vertex,
                                             double* x, double* y);
MCRT_API double mcrt_embedding_harmonic_residual(const mcrt_embedding* emb);
MCRT_API uint64_t mcrt_embedding_flipped_faces(const mcrt_embedding* emb);

/* Growth models. Output arrays have mcrt_map_vertex_count() entries.
 * hit_time is UINT64_MAX at unoccupied vertices. */
MCRT_API mcrt_status mcrt_idla_run(const mcrt_map* map, uint32_t source, uint64_t walkers,
                                   uint64_t seed, uint64_t* hit_time, uint64_t* occupied_count);
MCRT_API mcrt_status mcrt_sandpile_run(const mcrt_map* map, uint32_t source, double mass,
                                       mcrt_sweep sweep, uint64_t sweep_seed, double stab_tol,
                                       double* final_mass, double* odometer);

/* Commands. config_path may be NULL or empty (defaults); overrides_json is
 * a JSON object merged on top (may be NULL). On return *report_json holds a
 * JSON report to be released with mcrt_string_free (may be NULL on error).
 * The status is the process exit code for the command. */
MCRT_API mcrt_status mcrt_command(const char* command, const char* config_path,
                                  const char* overrides_json, char** report_json);
MCRT_API void mcrt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MCRT_MCRT_H */
