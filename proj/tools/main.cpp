#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "capa_isac/baselines.hpp"
#include "capa_isac/scene_io.hpp"
#include "commands.hpp"

using namespace capa_isac;

int main(int argc, char** argv) {
    CLI::App app{"Aperture-array dual-function rate analysis"};
    app.require_subcommand(1);

    cli::RatesOptions rates_opt;
    CLI::App* rates = app.add_subcommand(
        "rates", "All CAPA, discrete-array, and frequency-split rates for one scene");
    rates->add_option("--config", rates_opt.config_path, "Scene config file")->required();
    rates->add_option("--out", rates_opt.out_path, "Write the table as CSV");

    cli::SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep SNR or aperture size, emit CSV");
    sweep->add_option("--config", sweep_opt.config_path, "Scene config file")->required();
    sweep->add_option("--out", sweep_opt.out_path, "Output CSV path (default stdout)");
    std::string axis = "snr";
    sweep->add_option("--axis", axis, "Sweep axis: snr | aperture")
        ->check(CLI::IsMember({"snr", "aperture"}));
    sweep->add_option("--start", sweep_opt.start, "First sweep value (dB or side in m)")
        ->required();
    sweep->add_option("--stop", sweep_opt.stop, "Last sweep value")->required();
    sweep->add_option("--steps", sweep_opt.steps, "Number of sweep points (>= 2)")->required();

    cli::RegionOptions region_opt;
    CLI::App* region = app.add_subcommand("region", "Rate-region boundaries, emit CSV");
    std::string link = "dl";
    region->add_option("link", link, "dl or ul")->check(CLI::IsMember({"dl", "ul"}));
    region->add_option("--config", region_opt.config_path, "Scene config file")->required();
    region->add_option("--out", region_opt.out_path, "Output CSV path (default stdout)");
    region->add_option("--grid", region_opt.grid_n, "Boundary samples per system");

    cli::ValidateOptions validate_opt;
    CLI::App* validate = app.add_subcommand("validate", "Run the self-check suites");
    validate->add_option("--config", validate_opt.config_path,
                         "Scene config file (default: built-in scene)");
    std::string level = "fast";
    validate->add_option("--level", level, "fast skips the big grid search; full runs it")
        ->check(CLI::IsMember({"fast", "full"}));
    validate->add_option("--seed", validate_opt.seed, "Seed for the randomized suites");
    validate
        ->add_option("--perturb-gains", validate_opt.perturb_gains,
                     "Testing hook: inject a relative fault into the closed-form gains")
        ->default_val(0.0);

    cli::DumpKernelOptions dump_opt;
    CLI::App* dump = app.add_subcommand("dump-kernel", "Sample the field kernels as CSV");
    dump->add_option("--config", dump_opt.config_path, "Scene config file")->required();
    dump->add_option("--out", dump_opt.out_path, "Output CSV path (default stdout)");
    dump->add_option("--grid", dump_opt.grid_n, "Samples per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitConfigError;
    }

    try {
        if (rates->parsed()) return cli::cmd_rates(rates_opt, std::cout);
        if (sweep->parsed()) {
            sweep_opt.axis =
                axis == "snr" ? cli::SweepAxis::SnrDb : cli::SweepAxis::ApertureSide;
            return cli::cmd_sweep(sweep_opt, std::cout);
        }
        if (region->parsed()) {
            region_opt.uplink = link == "ul";
            return cli::cmd_region(region_opt, std::cout);
        }
        if (validate->parsed()) {
            validate_opt.full = level == "full";
            return cli::cmd_validate(validate_opt, std::cout);
        }
        if (dump->parsed()) return cli::cmd_dump_kernel(dump_opt, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kExitConfigError;
    } catch (const EmptyArrayError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitValidationFailure;
    }
    return cli::kExitConfigError;
}
