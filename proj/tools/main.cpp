#include "commands.hpp"

#include "dynalg/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using dynalg::cli::Format;
using dynalg::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
    static const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
    sub->add_option("--n-max", cfg.n_max, "Fock space cutoff on total occupation")->check(CLI::Range(2, 64));
    sub->add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    sub->add_flag("--parallel", cfg.parallel, "Run independent checks on several threads");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"so(4,2) hydrogen-atom Lie algebra verification engine", "dynalg"};
    app.require_subcommand(1);

    const std::map<std::string, std::string> help{
        {"verify-algebra", "Commutation table, hermiticity, state labeling and orbit span"},
        {"casimirs", "Casimir eigenvalues on labeled physical states"},
        {"descent", "sp(8,R) -> centralizer -> quotient, compared with so(4,2)"},
        {"spectrum", "Hydrogen and oscillator levels and degeneracies"},
        {"branch", "Branching tables and the so(3,2) parity split"},
        {"ks-check", "Kustaanheimo-Stiefel identities on random points"},
        {"chart", "Periodic chart slots"},
        {"census", "Racah count and the commuting-set census"},
        {"all", "Every suite"}};

    for (const auto& name : dynalg::cli::command_names()) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        add_common(sub, cfg);
        if (name == "chart" || name == "all") sub->add_option("--rows", cfg.rows, "Chart rows")->check(CLI::Range(1, 12));
        if (name == "spectrum" || name == "all") {
            sub->add_option("--system", cfg.system, "hydrogen, oscillator or both")
                ->check(CLI::IsMember({"hydrogen", "oscillator", "both"}));
            sub->add_option("--dim", cfg.dim, "Spatial dimension N (default 3 for hydrogen, 4 for the oscillator)")
                ->check(CLI::Range(1, 64));
            sub->add_option("--levels", cfg.levels, "Highest level index")->check(CLI::Range(1, 200));
        }
        if (name == "ks-check" || name == "all")
            sub->add_option("--samples", cfg.samples, "Random points")->check(CLI::Range(1, 10000000));
        sub->final_callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto results = dynalg::cli::run(cfg);
        const std::string report = dynalg::cli::render(cfg, results);
        if (cfg.out.empty()) {
            std::cout << report;
        } else {
            std::ofstream os(cfg.out, std::ios::binary);
            if (!os) {
                std::cerr << "error: cannot open " << cfg.out << '\n';
                return 2;
            }
            os << report;
        }
        for (const auto& r : results)
            for (const auto& c : r.checks)
                if (!c.ok) std::cerr << "check failed: " << r.command << "/" << c.name << ' ' << c.detail.dump() << '\n';
        const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
        return ok ? 0 : 1;
    } catch (const dynalg::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
