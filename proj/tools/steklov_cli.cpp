// Command-line front end: bound, spectrum, verify, sharpness, lstar, profile.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steklov/commands.hpp"
#include "steklov/error.hpp"

namespace {

using steklov::cli::RunConfig;

void add_geometry(CLI::App* sub, RunConfig& cfg, bool with_length) {
    sub->add_option("--n", cfg.n, "Dimension of the hypersurface (n >= 3)");
    sub->add_option("--r1", cfg.r1, "Radius of the first boundary sphere");
    sub->add_option("--r2", cfg.r2, "Radius of the second boundary sphere");
    if (with_length) sub->add_option("--length", cfg.length, "Meridian length L");
}

void add_output(CLI::App* sub, RunConfig& cfg, std::string& format) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output_path, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steklov eigenvalues and upper bounds for hypersurfaces of revolution"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "json";
    std::string epsilons;

    auto* bound = app.add_subcommand("bound", "Evaluate the two-shell upper bound for sigma_1");
    add_geometry(bound, cfg, true);
    add_output(bound, cfg, format);

    auto* spectrum = app.add_subcommand("spectrum", "Steklov spectrum of a profile file");
    spectrum->add_option("--profile", cfg.profile_path, "CSV profile with header r,h")->required();
    spectrum->add_option("--n", cfg.n, "Dimension of the hypersurface (n >= 3)");
    spectrum->add_option("--modes", cfg.modes, "Number K of nonzero eigenvalues to report");
    auto* grid_opt = spectrum->add_option("--grid", cfg.grid, "Solver grid size (default: native)");
    add_output(spectrum, cfg, format);

    auto* verify = app.add_subcommand("verify", "Check the bound on random admissible profiles");
    add_geometry(verify, cfg, true);
    verify->add_option("--grid", cfg.grid, "Profile and solver grid size");
    verify->add_option("--trials", cfg.trials, "Number of random profiles");
    verify->add_option("--seed", cfg.seed, "Seed of the first trial (trial i uses seed + i)");
    add_output(verify, cfg, format);

    auto* sharp = app.add_subcommand("sharpness", "Gap between the bound and rounded tents");
    add_geometry(sharp, cfg, true);
    sharp->add_option("--grid", cfg.grid, "Profile and solver grid size");
    sharp->add_option("--epsilon-list", epsilons, "Comma-separated decreasing epsilons");
    add_output(sharp, cfg, format);

    auto* ls = app.add_subcommand("lstar", "Crossing length L* and the length-free bound B_n");
    add_geometry(ls, cfg, false);
    ls->add_option("--tol", cfg.tol, "Relative tolerance of the crossing");
    add_output(ls, cfg, format);

    auto* prof = app.add_subcommand("profile", "Write a generated profile as CSV");
    add_geometry(prof, cfg, true);
    prof->add_option("--kind", cfg.kind, "annulus | tent | random | sharpness");
    prof->add_option("--epsilon", cfg.epsilon, "Corner rounding (tent) or sharpness epsilon");
    prof->add_option("--seed", cfg.seed, "Seed for random profiles");
    prof->add_option("--grid", cfg.grid, "Number of grid points");
    prof->add_option("--output", cfg.output_path, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return steklov::cli::kInvalidInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "csv" ? steklov::cli::OutputFormat::Csv : steklov::cli::OutputFormat::Json;
    cfg.grid_given = grid_opt->count() > 0;
    if (!epsilons.empty()) {
        try {
            cfg.epsilon_list = steklov::cli::parse_number_list(epsilons);
        } catch (const steklov::Error& e) {
            std::cerr << "error: --epsilon-list: " << e.what() << '\n';
            return steklov::cli::kInvalidInput;
        }
    }

    const auto result = steklov::cli::run(cfg);
    const std::string text = cfg.command == "profile"
                                 ? result.csv
                                 : steklov::cli::render(result, cfg.format);
    if (!text.empty()) {
        if (cfg.output_path) {
            const auto path = steklov::cli::resolve_output_path(*cfg.output_path);
            std::ofstream out(path);
            if (!out) {
                std::cerr << "error: cannot write '" << path << "'\n";
                return steklov::cli::kInvalidInput;
            }
            out << text;
        } else {
            std::cout << text;
        }
    }
    if (!result.message.empty()) {
        std::cerr << (result.exit_code == steklov::cli::kSuccess ? "" : "error: ") << result.message
                  << '\n';
    }
    return result.exit_code;
}
