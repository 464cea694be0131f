//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file experiment.cpp
//---------------------------------------------------------------------------//
#include "mcrt/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "io_util.hpp"
#include "mcrt/embed.hpp"
#include "mcrt/error.hpp"
#include "mcrt/idla.hpp"
#include "mcrt/map_io.hpp"
#include "mcrt/pathgen.hpp"
#include "mcrt/rng.hpp"
#include "mcrt/svg.hpp"
#include "mcrt/version.hpp"
#include "mcrt/walk.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace mcrt
{
namespace
{
//---------------------------------------------------------------------------//
// Config <-> JSON
//---------------------------------------------------------------------------//
void reject_unknown(json const& obj,
                    std::set<std::string> const& known,
                    std::string const& where)
{
    if (!obj.is_object())
        throw DomainError("config: '" + where + "' must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw DomainError("config: unknown key '" + where + it.key() + "'");
}

template<class T>
void take(json const& obj, char const* key, T& dst, std::string const& where)
{
    if (!obj.contains(key))
        return;
    try
    {
        dst = obj.at(key).get<T>();
    }
    catch (json::exception const&)
    {
        throw DomainError("config: bad value for '" + where + key + "'");
    }
}

void apply_json(ExperimentConfig& c, json const& j)
{
    reject_unknown(j,
                   {"gamma", "n_cells", "t", "seed", "threads", "out", "solver",
                    "sandpile", "walk", "grow", "compare", "verify"},
                   "");
    take(j, "gamma", c.gamma, "");
    take(j, "n_cells", c.n_cells, "");
    take(j, "t", c.t, "");
    take(j, "seed", c.seed, "");
    take(j, "threads", c.threads, "");
    take(j, "out", c.out, "");
    if (j.contains("solver"))
    {
        auto const& s = j["solver"];
        reject_unknown(s, {"tolerance", "embed_tolerance"}, "solver.");
        take(s, "tolerance", c.solver_tolerance, "solver.");
        take(s, "embed_tolerance", c.embed_tolerance, "solver.");
    }
    if (j.contains("sandpile"))
    {
        auto const& s = j["sandpile"];
        reject_unknown(s, {"stab_tol_rel", "cluster_tol_rel", "sweep", "sweep_seed"},
                       "sandpile.");
        take(s, "stab_tol_rel", c.stab_tol_rel, "sandpile.");
        take(s, "cluster_tol_rel", c.cluster_tol_rel, "sandpile.");
        std::string order;
        take(s, "sweep", order, "sandpile.");
        if (order == "forward")
            c.sweep.order = SweepOrder::forward;
        else if (order == "random")
            c.sweep.order = SweepOrder::random_permutation;
        else if (!order.empty())
            throw DomainError("config: sandpile.sweep must be 'forward' or 'random'");
        take(s, "sweep_seed", c.sweep.seed, "sandpile.");
    }
    if (j.contains("walk"))
    {
        reject_unknown(j["walk"], {"max_steps"}, "walk.");
        take(j["walk"], "max_steps", c.walk_max_steps, "walk.");
    }
    if (j.contains("grow"))
    {
        auto const& s = j["grow"];
        reject_unknown(s, {"model", "until_boundary", "max_walkers"}, "grow.");
        take(s, "model", c.model, "grow.");
        take(s, "until_boundary", c.until_boundary, "grow.");
        take(s, "max_walkers", c.max_walkers, "grow.");
    }
    if (j.contains("compare"))
    {
        auto const& s = j["compare"];
        reject_unknown(s, {"scales", "seeds", "max_attempts", "bootstrap"}, "compare.");
        take(s, "scales", c.compare_scales, "compare.");
        take(s, "seeds", c.compare_seeds, "compare.");
        take(s, "max_attempts", c.compare_max_attempts, "compare.");
        take(s, "bootstrap", c.bootstrap_replicates, "compare.");
    }
    if (j.contains("verify"))
    {
        auto const& s = j["verify"];
        reject_unknown(s,
                       {"n_cells", "seeds", "max_attempts", "t", "harmonic_fields",
                        "pairs", "map_file"},
                       "verify.");
        take(s, "n_cells", c.verify_n_cells, "verify.");
        take(s, "seeds", c.verify_seeds, "verify.");
        take(s, "max_attempts", c.verify_max_attempts, "verify.");
        take(s, "t", c.verify_t, "verify.");
        take(s, "harmonic_fields", c.verify_harmonic_fields, "verify.");
        take(s, "pairs", c.verify_pairs, "verify.");
        take(s, "map_file", c.verify_map_file, "verify.");
    }
}

json config_json(ExperimentConfig const& c)
{
    return json{
        {"gamma", c.gamma},
        {"n_cells", c.n_cells},
        {"t", c.t},
        {"seed", c.seed},
        {"threads", c.threads},
        {"out", c.out},
        {"solver", {{"tolerance", c.solver_tolerance}, {"embed_tolerance", c.embed_tolerance}}},
        {"sandpile",
         {{"stab_tol_rel", c.stab_tol_rel},
          {"cluster_tol_rel", c.cluster_tol_rel},
          {"sweep", c.sweep.order == SweepOrder::forward ? "forward" : "random"},
          {"sweep_seed", c.sweep.seed}}},
        {"walk", {{"max_steps", c.walk_max_steps}}},
        {"grow",
         {{"model", c.model},
          {"until_boundary", c.until_boundary},
          {"max_walkers", c.max_walkers}}},
        {"compare",
         {{"scales", c.compare_scales},
          {"seeds", c.compare_seeds},
          {"max_attempts", c.compare_max_attempts},
          {"bootstrap", c.bootstrap_replicates}}},
        {"verify",
         {{"n_cells", c.verify_n_cells},
          {"seeds", c.verify_seeds},
          {"max_attempts", c.verify_max_attempts},
          {"t", c.verify_t},
          {"harmonic_fields", c.verify_harmonic_fields},
          {"pairs", c.verify_pairs},
          {"map_file", c.verify_map_file}}},
    };
}

json parse_jsonc(std::string const& text, std::string const& what)
{
    try
    {
        return json::parse(text, nullptr, true, true);
    }
    catch (json::parse_error const& e)
    {
        throw DomainError(what + ": " + e.what());
    }
}

//---------------------------------------------------------------------------//
// Artifacts
//---------------------------------------------------------------------------//
fs::path out_dir(ExperimentConfig const& c)
{
    fs::path dir(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + c.out + "': " + ec.message());
    return dir;
}

json read_manifest(fs::path const& dir)
{
    auto file = dir / "manifest.json";
    if (!fs::exists(file))
        return json::object();
    try
    {
        return json::parse(detail::read_text_file(file.string()));
    }
    catch (json::exception const& e)
    {
        throw IoError("unreadable manifest " + file.string() + ": " + e.what());
    }
}

void write_manifest(fs::path const& dir, json const& manifest)
{
    detail::write_text_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
}

void record_file(json& manifest, fs::path const& dir, std::string const& name)
{
    manifest["files"][name] = detail::file_hash((dir / name).string());
}

json formats_json()
{
    return json{{"path", path_format_version},
                {"map", map_format_version},
                {"positions", "csv-1"},
                {"faces", 1},
                {"svg", svg_style_version}};
}

struct Artifacts
{
    MatedCrtMap map;
    Embedding emb;
};

Embedding embedding_from_files(MatedCrtMap const& map, fs::path const& dir)
{
    std::ifstream is(dir / "positions.csv");
    if (!is)
        throw IoError("missing " + (dir / "positions.csv").string()
                      + "; run generate first");
    auto pos = read_positions_csv(is);
    if (pos.size() != map.vertex_count())
        throw StructuralError("positions.csv does not match map.bin");
    // Faces and outer face are recomputed; positions come from disk so that
    // redraws do not depend on solver rounding.
    Embedding emb;
    emb.faces = trace_faces(map);
    emb.position = std::move(pos);
    emb.on_circle.assign(map.vertex_count(), 0);
    auto manifest = read_manifest(dir);
    if (manifest.contains("embedding"))
        emb.outer_face = manifest["embedding"].value("outer_face", 0u);
    for (Vertex v = 0; v < map.vertex_count(); ++v)
        emb.on_circle[v] = map.is_boundary(v);
    return emb;
}

Artifacts load_artifacts(ExperimentConfig const& c)
{
    fs::path dir(c.out);
    if (!fs::exists(dir / "map.bin"))
        throw IoError("missing " + (dir / "map.bin").string() + "; run generate first");
    Artifacts a;
    a.map = load_map((dir / "map.bin").string());
    a.emb = embedding_from_files(a.map, dir);
    return a;
}

double nan_value()
{
    return std::numeric_limits<double>::quiet_NaN();
}

void write_svg(fs::path const& file,
               MatedCrtMap const& map,
               Embedding const& emb,
               std::vector<double> const& value,
               std::vector<char> const& markers,
               std::string const& title)
{
    SvgOptions opt;
    opt.title = title;
    opt.draw_edges = map.vertex_count() <= 20000;
    detail::write_text_file(file.string(), render_svg(map, emb, value, markers, opt));
}

struct GrowthDump
{
    std::vector<double> value;
    std::vector<char> markers;
};

GrowthDump idla_dump_from_csv(std::size_t n, fs::path const& file)
{
    std::ifstream is(file);
    if (!is)
        throw IoError("missing " + file.string() + "; run grow first");
    GrowthDump d{std::vector<double>(n, nan_value()), std::vector<char>(n, 0)};
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line))
    {
        std::istringstream row(line);
        std::string v, occ, hit;
        std::getline(row, v, ',');
        std::getline(row, occ, ',');
        std::getline(row, hit, ',');
        auto idx = std::stoul(v);
        if (idx >= n)
            throw IoError("idla.csv does not match the map");
        if (occ == "1")
        {
            d.markers[idx] = 1;
            d.value[idx] = std::stod(hit);
        }
    }
    return d;
}

GrowthDump sandpile_dump(MatedCrtMap const& map,
                         SandpileState const& st,
                         SandpileCluster const& cl)
{
    std::size_t n = map.vertex_count();
    GrowthDump d{std::vector<double>(n, nan_value()), cl.closure};
    for (Vertex v = 0; v < n; ++v)
        if (cl.closure[v])
            d.value[v] = st.odometer[v];
    return d;
}

GrowthDump sandpile_dump_from_csv(MatedCrtMap const& map, fs::path const& file, double tol_rel)
{
    std::ifstream is(file);
    if (!is)
        throw IoError("missing " + file.string() + "; run grow first");
    std::size_t n = map.vertex_count();
    SandpileState st;
    st.mass.assign(n, 0.0);
    st.odometer.assign(n, 0.0);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line))
    {
        std::istringstream row(line);
        std::string v, m, o;
        std::getline(row, v, ',');
        std::getline(row, m, ',');
        std::getline(row, o, ',');
        auto idx = std::stoul(v);
        if (idx >= n)
            throw IoError("sandpile.csv does not match the map");
        st.mass[idx] = std::stod(m);
        st.odometer[idx] = std::stod(o);
    }
    for (double m : st.mass)
        st.T += m;
    auto cl = cluster(map, st, tol_rel * st.T, tol_rel * st.T);
    return sandpile_dump(map, st, cl);
}

}  // namespace

//---------------------------------------------------------------------------//
void ExperimentConfig::validate() const
{
    auto bad = [](std::string const& what) { throw DomainError("config: " + what); };
    if (!(gamma > 0 && gamma < 2))
        bad("gamma must lie in (0, 2)");
    if (n_cells < 1 || n_cells > std::numeric_limits<Vertex>::max() / 2)
        bad("n_cells out of range");
    if (!(t >= 0) || !std::isfinite(t))
        bad("t must be finite and >= 0");
    if (threads < 1)
        bad("threads must be >= 1");
    if (out.empty())
        bad("out must name a directory");
    if (!(solver_tolerance > 0 && solver_tolerance < 1))
        bad("solver.tolerance must lie in (0, 1)");
    if (!(embed_tolerance > 0 && embed_tolerance < 1))
        bad("solver.embed_tolerance must lie in (0, 1)");
    if (!(stab_tol_rel > 0 && stab_tol_rel < 1))
        bad("sandpile.stab_tol_rel must lie in (0, 1)");
    if (!(cluster_tol_rel > 0 && cluster_tol_rel < 1))
        bad("sandpile.cluster_tol_rel must lie in (0, 1)");
    if (model != "idla" && model != "sandpile")
        bad("grow.model must be 'idla' or 'sandpile'");
    if (compare_scales.empty())
        bad("compare.scales must be nonempty");
    for (auto s : compare_scales)
        if (s < 1 || s > std::numeric_limits<Vertex>::max() / 2)
            bad("compare.scales entries out of range");
    if (compare_seeds < 1 || compare_max_attempts < compare_seeds)
        bad("compare.max_attempts must be >= compare.seeds >= 1");
    if (bootstrap_replicates < 1)
        bad("compare.bootstrap must be >= 1");
    if (verify_n_cells < 3)
        bad("verify.n_cells must be >= 3");
    if (verify_seeds < 1 || verify_max_attempts < verify_seeds)
        bad("verify.max_attempts must be >= verify.seeds >= 1");
    if (!(verify_t >= 0) || !std::isfinite(verify_t))
        bad("verify.t must be finite and >= 0");
}

ExperimentConfig config_from_json(std::string const& text)
{
    ExperimentConfig c;
    apply_json(c, parse_jsonc(text, "config"));
    c.validate();
    return c;
}

ExperimentConfig load_config(std::string const& path, std::string const& overrides_json)
{
    ExperimentConfig c;
    if (!path.empty())
    {
        std::string text;
        try
        {
            text = detail::read_text_file(path);
        }
        catch (IoError const& e)
        {
            throw DomainError(std::string("config: ") + e.what());
        }
        apply_json(c, parse_jsonc(text, "config " + path));
    }
    if (!overrides_json.empty())
        apply_json(c, parse_jsonc(overrides_json, "overrides"));
    c.validate();
    return c;
}

std::string config_to_json(ExperimentConfig const& config)
{
    return config_json(config).dump(2);
}

namespace
{
constexpr std::size_t exit_scale_walks = 1000;
}  // namespace

std::uint64_t walker_budget(ExperimentConfig const& c)
{
    return static_cast<std::uint64_t>(std::floor(c.t * static_cast<double>(c.n_cells) + 1e-9));
}

double sandpile_mass(ExperimentConfig const& c)
{
    return c.t * static_cast<double>(c.n_cells);
}

MatedCrtMap generate_from_config(ExperimentConfig const& c,
                                 std::uint64_t n_cells,
                                 std::uint64_t seed)
{
    auto path = sample_correlated_paths(c.gamma, 1.0 / static_cast<double>(n_cells),
                                        n_cells, seed);
    return generate_map(path);
}

//---------------------------------------------------------------------------//
CommandResult cmd_generate(ExperimentConfig const& c)
{
    c.validate();
    auto dir = out_dir(c);
    CommandResult res;

    auto path = sample_correlated_paths(c.gamma, 1.0 / static_cast<double>(c.n_cells),
                                        c.n_cells, c.seed);
    auto map = generate_map(path);
    EmbedConfig ec;
    ec.solver.tolerance = c.embed_tolerance;
    auto emb = tutte_embed(map, ec);

    save_path(path, (dir / "path.bin").string());
    save_map(map, (dir / "map.bin").string());
    {
        std::ostringstream os;
        write_positions_csv(emb, os);
        detail::write_text_file((dir / "positions.csv").string(), os.str());
    }
    {
        std::ostringstream os;
        write_faces_json(map, emb, os);
        detail::write_text_file((dir / "faces.json").string(), os.str());
    }
    if (emb.flipped_faces > 0)
    {
        json diag = json::array();
        for (auto f : emb.flipped)
        {
            json verts = json::array();
            for (auto d : emb.faces.face(f))
                verts.push_back(map.end_owner(d));
            diag.push_back({{"face", f}, {"vertices", verts}, {"area", emb.face_area(map, f)}});
        }
        detail::write_text_file((dir / "flipped_faces.json").string(), diag.dump(2) + "\n");
        res.warnings.push_back(std::to_string(emb.flipped_faces)
                               + " inner faces have negative orientation; see "
                                 "flipped_faces.json");
    }

    json stats{{"vertices", map.vertex_count()},
               {"edges", map.edge_count()},
               {"mean_degree", map.mean_degree()},
               {"max_degree", map.max_degree()},
               {"boundary_fraction", map.boundary_fraction()},
               {"boundary_vertices", map.boundary_vertices().size()}};
    json embedding{{"outer_face", emb.outer_face},
                   {"reflected", emb.reflected},
                   {"harmonic_residual", emb.harmonic_residual},
                   {"circle_residual", emb.circle_residual},
                   {"flipped_faces", emb.flipped_faces},
                   {"degenerate_faces", emb.degenerate_faces},
                   {"faces", emb.faces.size()}};
    json manifest{{"tool", "mcrt"},
                  {"version", version_string},
                  {"epsilon", "1/n_cells"},
                  {"config", config_json(c)},
                  {"seeds", {{"path", c.seed}}},
                  {"formats", formats_json()},
                  {"map", stats},
                  {"embedding", embedding},
                  {"files", json::object()}};
    for (char const* name : {"path.bin", "map.bin", "positions.csv", "faces.json"})
        record_file(manifest, dir, name);
    write_manifest(dir, manifest);
    res.report = json{{"command", "generate"}, {"map", stats}, {"embedding", embedding}}.dump(2);
    return res;
}

CommandResult cmd_grow(ExperimentConfig const& c)
{
    c.validate();
    auto dir = out_dir(c);
    auto art = load_artifacts(c);
    auto const& map = art.map;
    std::size_t const n = map.vertex_count();
    Vertex const source = center_vertex(n);
    // The budget follows the loaded map, whatever n_cells the config says.
    ExperimentConfig sized = c;
    sized.n_cells = n;
    CommandResult res;
    json metrics{{"model", c.model}, {"source", source}, {"t", c.t}, {"seed", c.seed},
                 {"n_cells", n}};
    GrowthDump dump;
    std::string csv_name;

    if (c.model == "idla")
    {
        IdlaState st;
        if (c.until_boundary)
        {
            auto cap = c.max_walkers ? c.max_walkers : n;
            auto run = run_idla_until_boundary(map, source, c.seed, cap, c.walk_max_steps);
            metrics["reached_boundary"] = run.reached_boundary;
            st = std::move(run.state);
        }
        else
        {
            st = run_idla(map, walker_budget(sized), source, c.seed, c.walk_max_steps);
        }
        std::uint64_t max_hit = 0;
        dump.value.assign(n, nan_value());
        dump.markers = st.occupied;
        for (Vertex v = 0; v < n; ++v)
            if (st.occupied[v])
            {
                max_hit = std::max(max_hit, st.hit_time[v]);
                dump.value[v] = static_cast<double>(st.hit_time[v]);
            }
        metrics["walkers"] = st.walkers_emitted;
        metrics["cluster_size"] = st.occupied_count();
        metrics["max_hit_time"] = max_hit;
        metrics["steps"] = st.clock;
        csv_name = "idla.csv";
        std::ostringstream os;
        write_idla_csv(st, os);
        detail::write_text_file((dir / csv_name).string(), os.str());
    }
    else
    {
        double const T = sandpile_mass(sized);
        auto st = stabilize(map, source, T, c.sweep, c.stab_tol_rel * std::max(T, 1.0));
        auto cl = cluster(map, st, c.cluster_tol_rel * T, c.cluster_tol_rel * T);
        double total = 0, max_odo = 0;
        for (Vertex v = 0; v < n; ++v)
        {
            total += st.mass[v];
            max_odo = std::max(max_odo, st.odometer[v]);
        }
        metrics["T"] = T;
        metrics["cluster_size"] = cl.closure_count;
        metrics["toppled"] = cl.toppled_count;
        metrics["max_odometer"] = max_odo;
        metrics["total_mass"] = total;
        metrics["sweeps"] = st.sweeps;
        metrics["topplings"] = st.topplings;
        dump = sandpile_dump(map, st, cl);
        csv_name = "sandpile.csv";
        std::ostringstream os;
        write_sandpile_csv(st, os);
        detail::write_text_file((dir / csv_name).string(), os.str());
    }

    // Walk time scale from the embedding, so odometers can be rescaled.
    auto scale = median_exit_steps(map, art.emb.position, source, 0.5, exit_scale_walks,
                                   derive_key(c.seed, 0x6d657073), c.walk_max_steps);
    metrics["m_eps_estimate"] = {{"median_steps", scale.median_steps},
                                 {"walks", scale.walks},
                                 {"stopped_by_boundary", scale.stopped_by_boundary},
                                 {"radius", 0.5},
                                 {"kind", "estimate"}};
    if (metrics.contains("max_odometer") && scale.median_steps > 0)
        metrics["max_odometer_rescaled"]
            = metrics["max_odometer"].get<double>() / scale.median_steps;

    std::string const svg_name = c.model + ".svg";
    write_svg(dir / svg_name, map, art.emb, dump.value, dump.markers, c.model + " cluster");
    detail::write_text_file((dir / "metrics.json").string(), metrics.dump(2) + "\n");

    auto manifest = read_manifest(dir);
    manifest["grow"] = {{"config", config_json(c)},
                        {"formats", formats_json()},
                        {"seeds", {{"walkers", c.seed}, {"sweep", c.sweep.seed}}}};
    for (auto const& name : {csv_name, svg_name, std::string("metrics.json")})
        record_file(manifest, dir, name);
    write_manifest(dir, manifest);
    res.report = metrics.dump(2);
    return res;
}

CommandResult cmd_render(ExperimentConfig const& c)
{
    c.validate();
    fs::path dir(c.out);
    auto art = load_artifacts(c);
    GrowthDump dump;
    if (c.model == "idla")
        dump = idla_dump_from_csv(art.map.vertex_count(), dir / "idla.csv");
    else
    {
        dump = sandpile_dump_from_csv(art.map, dir / "sandpile.csv", c.cluster_tol_rel);
    }
    std::string const svg_name = c.model + ".svg";
    write_svg(dir / svg_name, art.map, art.emb, dump.value, dump.markers, c.model + " cluster");
    CommandResult res;
    std::size_t markers = static_cast<std::size_t>(
        std::count(dump.markers.begin(), dump.markers.end(), 1));
    res.report = json{{"command", "render"},
                      {"svg", (dir / svg_name).string()},
                      {"markers", markers},
                      {"hash", detail::file_hash((dir / svg_name).string())}}
                     .dump(2);
    return res;
}

}  // namespace mcrt
