//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file compare.cpp
//---------------------------------------------------------------------------//
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include <json.hpp>

#include "mcrt/embed.hpp"
#include "mcrt/error.hpp"
#include "mcrt/experiment.hpp"
#include "mcrt/idla.hpp"
#include "mcrt/rng.hpp"
#include "mcrt/stats.hpp"

using nlohmann::json;

namespace mcrt
{
namespace
{
struct Replica
{
    bool overflow{false};
    double symdiff{0};
    double hausdorff{0};
};

Replica run_replica(ExperimentConfig const& c, std::uint64_t n, std::uint64_t seed)
{
    Replica r;
    auto map = generate_from_config(c, n, seed);
    Vertex const src = center_vertex(n);
    double const T = c.t * static_cast<double>(n);
    SandpileState st;
    try
    {
        st = stabilize(map, src, T, c.sweep, c.stab_tol_rel * std::max(T, 1.0));
    }
    catch (OverflowError const&)
    {
        r.overflow = true;
        return r;
    }
    auto cl = cluster(map, st, c.cluster_tol_rel * T, c.cluster_tol_rel * T);
    auto walkers = static_cast<std::uint64_t>(std::floor(T + 1e-9));
    auto idla = run_idla(map, walkers, src, derive_key(seed, 0x69646c61), c.walk_max_steps);
    EmbedConfig ec;
    ec.solver.tolerance = c.embed_tolerance;
    auto emb = tutte_embed(map, ec);
    auto m = shape_metrics(emb, idla.occupied, cl.closure);
    r.symdiff = m.symdiff_fraction;
    r.hausdorff = m.hausdorff;
    return r;
}
}  // namespace

CompareReport run_compare(ExperimentConfig const& c)
{
    c.validate();
    CompareReport rep;
    rep.t = c.t;
    for (std::uint64_t n : c.compare_scales)
    {
        ScaleSummary s;
        s.n_cells = n;
        std::uint64_t next = 0;
        // Batches of `threads` seeds; results are consumed in seed order so
        // the accepted set does not depend on the thread count.
        while (s.seeds.size() < c.compare_seeds && next < c.compare_max_attempts)
        {
            std::size_t batch = std::min<std::uint64_t>(c.threads, c.compare_max_attempts - next);
            std::vector<std::optional<Replica>> out(batch);
            std::vector<std::exception_ptr> err(batch);
            auto work = [&](std::size_t i) {
                try
                {
                    out[i] = run_replica(c, n, c.seed + next + i);
                }
                catch (...)
                {
                    err[i] = std::current_exception();
                }
            };
            if (batch == 1)
                work(0);
            else
            {
                std::vector<std::thread> pool;
                for (std::size_t i = 0; i < batch; ++i)
                    pool.emplace_back(work, i);
                for (auto& t : pool)
                    t.join();
            }
            for (std::size_t i = 0; i < batch && s.seeds.size() < c.compare_seeds; ++i)
            {
                if (err[i])
                    std::rethrow_exception(err[i]);
                ++s.attempts;
                if (out[i]->overflow)
                {
                    ++s.overflow_skipped;
                    continue;
                }
                s.seeds.push_back(c.seed + next + i);
                s.symdiff.push_back(out[i]->symdiff);
                s.hausdorff.push_back(out[i]->hausdorff);
            }
            next += batch;
        }
        if (s.seeds.size() < c.compare_seeds)
            throw OverflowError("compare: only " + std::to_string(s.seeds.size()) + " of "
                                + std::to_string(c.compare_seeds)
                                + " windows admitted the sandpile at n_cells = "
                                + std::to_string(n));
        auto band = bootstrap_median(s.symdiff, c.bootstrap_replicates, c.seed + n);
        s.median = band.median;
        s.band_lo = band.lo;
        s.band_hi = band.hi;
        s.hausdorff_median = median(s.hausdorff);
        rep.scales.push_back(std::move(s));
    }
    for (std::size_t k = 1; k < rep.scales.size(); ++k)
        if (rep.scales[k].median > rep.scales[k - 1].band_hi)
            rep.nonincreasing = false;
    return rep;
}

std::string CompareReport::to_json() const
{
    json scales_json = json::array();
    for (auto const& s : scales)
        scales_json.push_back({{"n_cells", s.n_cells},
                               {"attempts", s.attempts},
                               {"overflow_skipped", s.overflow_skipped},
                               {"seeds", s.seeds},
                               {"symdiff", s.symdiff},
                               {"hausdorff", s.hausdorff},
                               {"median_symdiff", s.median},
                               {"band_95", {s.band_lo, s.band_hi}},
                               {"median_hausdorff", s.hausdorff_median}});
    return json{{"command", "compare"},
                {"t", t},
                {"scales", scales_json},
                {"trend", nonincreasing ? "nonincreasing" : "increasing"},
                {"verdict", nonincreasing}}
        .dump(2);
}

CommandResult cmd_compare(ExperimentConfig const& c)
{
    auto rep = run_compare(c);
    CommandResult res;
    res.exit_code = rep.nonincreasing ? 0 : 1;
    res.report = rep.to_json();
    return res;
}

}  // namespace mcrt
