/*
   Copyright 2026 The invcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "invcurve/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "invcurve/errors.hpp"

namespace invcurve::cli {
namespace {

void apply_formats(RunConfig& cfg, const std::string& formats)
{
    cfg.csv = cfg.svg = false;
    std::stringstream ss(formats);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv")
            cfg.csv = true;
        else if (item == "svg")
            cfg.svg = true;
        else if (item != "json")
            throw CLI::ValidationError("--format", "unknown format '" + item + "' (use csv, json, svg)");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariant curves of rational maps: Poincare functions, Lattes maps, semiconjugacies", "invcurve"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    RunConfig cfg;
    std::string out_dir = ".";
    std::string formats = "json,csv,svg";
    auto add_globals = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "Tolerance for the command's main check")->check(CLI::PositiveNumber);
        sub->add_option("--order", cfg.order, "Truncation order (series terms)")->check(CLI::PositiveNumber);
        sub->add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--format", formats, "Comma-separated outputs among json,csv,svg");
    };

    PoincareArgs pa;
    auto* poincare = app.add_subcommand("poincare", "Poincare function of a map at a repelling fixed point");
    poincare->add_option("--map", pa.map, "Map as JSON text or file {\"num\": [...], \"den\": [...]}")->required();
    poincare->add_option("--fixed-point", pa.fixed_point, "Fixed point as re or re,im")->required();
    poincare->add_option("--trace-range", pa.trace_range, "Trace F on [-T, T]")->check(CLI::PositiveNumber);
    add_globals(poincare);

    ExampleArgs ea;
    auto* example = app.add_subcommand("example", "Reproduce example 1, 2 or 3");
    example->add_option("which", ea.which, "Example number")->required()->check(CLI::Range(1, 3));
    example->add_option("--offset", ea.offset, "Line offset re,im (examples 1 and 2)");
    example->add_option("--n", ea.n, "Chebyshev degree (example 3)")->check(CLI::Range(3, 64));
    add_globals(example);

    SemiconjArgs sa;
    auto* semiconj = app.add_subcommand("semiconj", "Build or verify h o g = f^n o h");
    auto* ou = semiconj->add_option("--u", sa.u, "Ritt factor u");
    auto* ov = semiconj->add_option("--v", sa.v, "Ritt factor v");
    ou->needs(ov);
    ov->needs(ou);
    auto* ow = semiconj->add_option("--w", sa.w, "Power family w");
    semiconj->add_option("--m", sa.m, "Power family exponent m")->check(CLI::NonNegativeNumber);
    semiconj->add_option("--n", sa.n, "Power family exponent n")->check(CLI::PositiveNumber);
    auto* ovf = semiconj->add_option("--verify", sa.verify, "Maps f g h to verify")->expected(3);
    semiconj->add_option("--iterate", sa.iterate, "Iterate count n in h o g = f^n o h")
        ->check(CLI::NonNegativeNumber);
    ou->excludes(ow);
    ou->excludes(ovf);
    ow->excludes(ovf);
    add_globals(semiconj);

    LattesArgs la;
    auto* lattes = app.add_subcommand("lattes", "Duplication map of a lattice, certified against wp");
    lattes->add_option("--lattice", la.lattice, "Lattice as JSON text or file {\"g1\": [re, im], \"g2\": [re, im]}")
        ->required();
    add_globals(lattes);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        apply_formats(cfg, formats);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help("", e.get_name() == "CallForAllHelp" ? CLI::AppFormatMode::All
                                                                  : CLI::AppFormatMode::Normal);
            return kExitOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    cfg.out = out_dir;

    try {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out, ec);
        if (ec)
            throw Error("cannot create " + cfg.out.string() + ": " + ec.message());
        if (*poincare)
            return cmd_poincare(cfg, pa, out);
        if (*example)
            return cmd_example(cfg, ea, out);
        if (*semiconj)
            return cmd_semiconj(cfg, sa, out, err);
        return cmd_lattes(cfg, la, out, err);
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace invcurve::cli
