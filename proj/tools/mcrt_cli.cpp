//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt_cli.cpp
//! Command-line front end; talks to the library only through mcrt.h.
//---------------------------------------------------------------------------//
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcrt/mcrt.h"

namespace
{
std::string quote(std::string const& s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

struct Options
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint64_t> scales;
    std::optional<std::string> out;
    std::optional<unsigned> threads;
    std::optional<double> t;
    std::optional<std::string> model;
    bool until_boundary{false};
    std::string report;
};

// Overrides are passed as a JSON object merged over the config file.
std::string overrides(std::string const& command, Options const& o)
{
    std::vector<std::string> top;
    std::vector<std::string> grow;
    if (o.seed)
        top.push_back("\"seed\":" + std::to_string(*o.seed));
    if (o.out)
        top.push_back("\"out\":" + quote(*o.out));
    if (o.threads)
        top.push_back("\"threads\":" + std::to_string(*o.threads));
    if (o.t)
    {
        std::ostringstream ss;
        ss.precision(17);
        ss << *o.t;
        top.push_back("\"t\":" + ss.str());
    }
    if (!o.scales.empty())
    {
        if (command == "compare")
        {
            std::string list;
            for (auto s : o.scales)
                list += (list.empty() ? "" : ",") + std::to_string(s);
            top.push_back("\"compare\":{\"scales\":[" + list + "]}");
        }
        else if (command == "verify")
            top.push_back("\"verify\":{\"n_cells\":" + std::to_string(o.scales.front()) + "}");
        else
            top.push_back("\"n_cells\":" + std::to_string(o.scales.front()));
    }
    if (o.model)
        grow.push_back("\"model\":" + quote(*o.model));
    if (o.until_boundary)
        grow.push_back("\"until_boundary\":true");
    if (!grow.empty())
    {
        std::string g;
        for (auto const& s : grow)
            g += (g.empty() ? "" : ",") + s;
        top.push_back("\"grow\":{" + g + "}");
    }
    std::string body;
    for (auto const& s : top)
        body += (body.empty() ? "" : ",") + s;
    return "{" + body + "}";
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mated-CRT maps, IDLA and the divisible sandpile"};
    app.set_version_flag("--version", std::string(mcrt_version()));
    app.require_subcommand(1);

    Options o;
    auto common = [&o](CLI::App* sub) {
        sub->add_option("--config", o.config, "JSON config file (comments allowed)");
        sub->add_option("--seed", o.seed, "Base seed");
        sub->add_option("--scale", o.scales,
                        "Number of cells (compare: repeat for several scales)");
        sub->add_option("--out", o.out, "Artifact directory");
        sub->add_option("--threads", o.threads, "Worker threads for replica ensembles")
            ->check(CLI::PositiveNumber);
        sub->add_option("--t", o.t, "Growth time: floor(t n) walkers or mass t n");
        sub->add_option("--report", o.report, "Also write the JSON report here");
    };

    auto* gen = app.add_subcommand("generate", "Sample a map and its Tutte embedding");
    auto* grow = app.add_subcommand("grow", "Grow an IDLA or sandpile cluster on a generated map");
    auto* cmp = app.add_subcommand("compare", "IDLA against sandpile across scales");
    auto* ver = app.add_subcommand("verify", "Run the identity suite");
    auto* ren = app.add_subcommand("render", "Redraw the SVG of the last grow run");
    for (auto* sub : {gen, grow, cmp, ver, ren})
        common(sub);
    for (auto* sub : {grow, ren})
        sub->add_option("--model", o.model, "idla or sandpile")
            ->check(CLI::IsMember({"idla", "sandpile"}));
    grow->add_flag("--until-boundary", o.until_boundary,
                   "IDLA: add walkers until one reaches the window boundary");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : MCRT_DOMAIN;
    }

    std::string const command = app.get_subcommands().front()->get_name();
    char* report = nullptr;
    mcrt_status st = mcrt_command(command.c_str(), o.config.c_str(),
                                  overrides(command, o).c_str(), &report);
    if (report)
    {
        std::cout << report << '\n';
        if (!o.report.empty())
        {
            std::ofstream os(o.report);
            os << report << '\n';
            if (!os)
            {
                std::cerr << "mcrt: cannot write report " << o.report << '\n';
                mcrt_string_free(report);
                return MCRT_IO;
            }
        }
        mcrt_string_free(report);
    }
    if (st != MCRT_OK)
        std::cerr << "mcrt " << command << ": " << mcrt_status_name(st) << ": "
                  << mcrt_last_error() << '\n';
    return static_cast<int>(st);
}
