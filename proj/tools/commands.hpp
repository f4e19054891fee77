#ifndef CAPA_ISAC_TOOLS_COMMANDS_HPP
#define CAPA_ISAC_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace capa_isac::cli {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitConfigError = 2;

struct RatesOptions {
    std::string config_path;
    std::string out_path;  // empty: no CSV file
};

enum class SweepAxis { SnrDb, ApertureSide };

struct SweepOptions {
    std::string config_path;
    std::string out_path;
    SweepAxis axis = SweepAxis::SnrDb;
    double start = 0.0;
    double stop = 30.0;
    int steps = 31;
};

struct RegionOptions {
    std::string config_path;
    std::string out_path;
    bool uplink = false;
    int grid_n = 101;
};

struct ValidateOptions {
    std::string config_path;
    bool full = false;
    std::uint64_t seed = 1;
    double perturb_gains = 0.0;  // test hook: relative closed-form gain fault
};

struct DumpKernelOptions {
    std::string config_path;
    std::string out_path;
    int grid_n = 64;
};

/// Each command writes its report to `out` (stdout in the CLI) and returns a
/// process exit code. Config problems surface as ConfigError and are mapped
/// to kExitConfigError by the caller.
int cmd_rates(const RatesOptions& opt, std::ostream& out);
int cmd_sweep(const SweepOptions& opt, std::ostream& out);
int cmd_region(const RegionOptions& opt, std::ostream& out);
int cmd_validate(const ValidateOptions& opt, std::ostream& out);
int cmd_dump_kernel(const DumpKernelOptions& opt, std::ostream& out);

}  // namespace capa_isac::cli

#endif
