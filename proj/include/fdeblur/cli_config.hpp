#ifndef FDEBLUR_CLI_CONFIG_HPP
#define FDEBLUR_CLI_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fdeblur/image.hpp"
#include "fdeblur/synth.hpp"

namespace fdeblur::cli {

/// Tunables shared by the CLI commands; defaults match the library defaults.
struct ToolOptions {
    int kernel_size = 25;
    double lambda = 1.1;
    double alpha = 0.5;
    double gamma1 = 4e-3;
    double gamma2 = 4e-3;
    double sigma = 1.0;
    double scale = 1.4142135623730951;
    double noise_std = 0.0;
    double trunc_factor = 2.0;
    double finisher_gamma1_scale = 0.1;
    int gl_taps = 3;
    std::uint64_t seed = 0;
    BoundaryMode boundary = BoundaryMode::Periodic;
};

/// All keys accepted in config files (and their CLI flag twins).
const std::vector<std::string>& valid_config_keys();

/// Parses `key = value` lines; '#' starts a comment, blank lines are ignored.
/// Keys are validated against valid_config_keys(); unknown keys raise
/// ConfigError listing the valid ones. Values are not interpreted here.
std::vector<std::pair<std::string, std::string>> load_config(const std::string& path);

/// Applies one key/value pair onto the options; throws ConfigError on
/// unparsable values.
void apply_option(ToolOptions& opts, const std::string& key, const std::string& value);

/// Parses "zero" | "periodic" | "reflexive".
BoundaryMode parse_boundary(const std::string& name);

/// Kernel mini-grammar `kind[:p1[:p2]]`: delta:SIZE, box:SIZE, gauss:SIZE:STD,
/// motion:LENGTH:ANGLE (size derived from the rotated segment extent).
synth::KernelSpec parse_kernel_spec(const std::string& text);

}  // namespace fdeblur::cli

#endif
