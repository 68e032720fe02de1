#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quotientopes/quotientopes.hpp"

namespace {

void add_congruence_flags(CLI::App* cmd, qtp::RunConfig& cfg) {
    cmd->add_option("--n", cfg.n, "ground set size (2..10; most operations are tighter)");
    cmd->add_option("--preset", cfg.preset, "full | sylvester | anti-sylvester | cube");
    cmd->add_option("--ideal", cfg.ideal_path, "ideal JSON file");
    cmd->add_option("--generators", cfg.generators,
                    "shards like \"1-3:[2];2-4:[]\" (semicolon or space separated), closed upward");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotientope: polytopal realizations of weak order quotients"};
    app.require_subcommand(1);
    qtp::RunConfig cfg;
    uint64_t seed_value = 0;

    CLI::App* build = app.add_subcommand("build", "construct one quotientope and write it out");
    add_congruence_flags(build, cfg);
    build->add_option("--weights", cfg.weights_path, "weights JSON file (default: built-in weights)");
    build->add_option("--format", cfg.format, "json | off (n=4) | csv2d (n=3)");
    build->add_option("--out", cfg.out, "output path (default quotientope.json)");
    build->add_option("--verify", cfg.verify_mode, "all | fast | off (default all)");

    CLI::App* enumerate = app.add_subcommand("enumerate", "all congruences at this n, with statistics");
    enumerate->add_option("--n", cfg.n, "ground set size (enumeration supports n <= 4)");
    enumerate->add_flag("--essential", cfg.essential_only, "essential congruences only");
    enumerate->add_option("--out", cfg.out, "output path (default congruences.json)");

    CLI::App* verify = app.add_subcommand("verify", "run the structural check suite");
    add_congruence_flags(verify, cfg);
    verify->add_option("--weights", cfg.weights_path, "weights JSON file (default: built-in weights)");
    verify->add_option("--heights", cfg.heights_path, "heights JSON file to verify instead of computing");
    verify->add_option("--verify", cfg.verify_mode, "all | fast (default all)");
    verify->add_option("--out", cfg.out, "report path (default verify_report.json)");
    CLI::Option* seed_opt =
        verify->add_option("--seed", seed_value, "sample seed; enables the sampled-ideal sweep");
    verify->add_option("--samples", cfg.sample_count, "sampled sweep size (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_validation;
    }
    if (seed_opt->count() > 0) cfg.seed = seed_value;

    try {
        if (build->parsed()) return qtp::run_build(cfg);
        if (enumerate->parsed()) return qtp::run_enumerate(cfg);
        return qtp::run_verify(cfg);
    } catch (const qtp::scale_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_scale;
    } catch (const qtp::singular_matrix_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_verification;
    } catch (const qtp::verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_verification;
    } catch (const qtp::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtp::exit_validation;
    }
}
