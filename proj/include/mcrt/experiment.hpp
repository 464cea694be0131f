//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/experiment.hpp
//! Experiment configuration and the command pipelines behind the CLI.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maps.hpp"
#include "sandpile.hpp"

namespace mcrt
{
/*!
 * All knobs of an experiment.
 *
 * The mesh is 1 / n_cells, so a time-t cluster means floor(t * n_cells)
 * IDLA walkers or sandpile mass t * n_cells. Growth starts at
 * center_vertex(n_cells).
 */
struct ExperimentConfig
{
    double gamma{1.4142135623730951};
    std::uint64_t n_cells{10000};
    double t{0.01};
    std::uint64_t seed{1};
    unsigned threads{1};
    std::string out{"out"};

    double solver_tolerance{1e-10};
    double embed_tolerance{1e-12};

    double stab_tol_rel{1e-12};
    double cluster_tol_rel{1e-9};
    SweepPolicy sweep{};

    std::uint64_t walk_max_steps{0};  //!< 0 selects default_max_steps

    std::string model{"idla"};
    bool until_boundary{false};
    std::uint64_t max_walkers{0};  //!< Cap for until_boundary; 0 = n_cells

    std::vector<std::uint64_t> compare_scales{1000, 10000, 100000};
    std::size_t compare_seeds{20};
    std::size_t compare_max_attempts{200};
    std::size_t bootstrap_replicates{2000};

    std::uint64_t verify_n_cells{2000};
    std::size_t verify_seeds{2};
    std::size_t verify_max_attempts{40};
    double verify_t{0.005};
    std::size_t verify_harmonic_fields{20};
    std::size_t verify_pairs{20};
    std::string verify_map_file;

    //! Throws DomainError on any out-of-range value.
    void validate() const;
};

//! Parse JSON (comments allowed) on top of the defaults. Unknown keys are
//! rejected.
ExperimentConfig config_from_json(std::string const& text);
//! Defaults, then the file (if nonempty), then the overrides object.
ExperimentConfig load_config(std::string const& path,
                             std::string const& overrides_json = {});
std::string config_to_json(ExperimentConfig const& config);

std::uint64_t walker_budget(ExperimentConfig const& config);
double sandpile_mass(ExperimentConfig const& config);

struct CommandResult
{
    int exit_code{0};
    std::string report;  //!< JSON
    std::vector<std::string> warnings;
};

//! Path, map and Tutte embedding with a manifest, written to config.out.
CommandResult cmd_generate(ExperimentConfig const& config);
//! Grow config.model on the generated map; cluster dump, metrics and SVG.
CommandResult cmd_grow(ExperimentConfig const& config);
//! Redraw the SVG of the last grow run from its artifacts.
CommandResult cmd_render(ExperimentConfig const& config);
//! IDLA against sandpile across config.compare_scales.
CommandResult cmd_compare(ExperimentConfig const& config);
//! Identity suite; exit code 1 names the failing check.
CommandResult cmd_verify(ExperimentConfig const& config);

//---------------------------------------------------------------------------//
// Building blocks shared with the commands
//---------------------------------------------------------------------------//
MatedCrtMap generate_from_config(ExperimentConfig const& config,
                                 std::uint64_t n_cells,
                                 std::uint64_t seed);

struct VerifyCheck
{
    std::string name;
    bool passed{false};
    double value{0};
    double threshold{0};
    std::string detail;
};

struct VerifyReport
{
    std::vector<VerifyCheck> checks;
    bool passed() const;
    std::string to_json() const;
};

VerifyReport run_verify(ExperimentConfig const& config);

struct ScaleSummary
{
    std::uint64_t n_cells{0};
    std::size_t attempts{0};
    std::size_t overflow_skipped{0};
    std::vector<std::uint64_t> seeds;
    std::vector<double> symdiff;
    std::vector<double> hausdorff;
    double median{0};
    double band_lo{0};
    double band_hi{0};
    double hausdorff_median{0};
};

struct CompareReport
{
    double t{0};
    std::vector<ScaleSummary> scales;
    //! median(k+1) <= band_hi(k) for each consecutive pair of scales.
    bool nonincreasing{true};
    std::string to_json() const;
};

CompareReport run_compare(ExperimentConfig const& config);

}  // namespace mcrt
