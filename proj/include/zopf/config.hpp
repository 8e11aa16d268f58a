#pragma once

#include "zopf/oracle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace zopf {

/// Full description of one experiment. Every field has a default, so a config
/// file or command line only needs to override what differs.
struct ExperimentConfig {
    // problem
    std::string problem = "quadratic_simplex"; // | l1_distance | max_affine
    int dim = 100;
    std::uint64_t seed = 1;
    double lambda_min = 1.0;
    double lambda_max = 10.0;
    int max_affine_pieces = 5;
    double stochastic_half_width = 0.0; // <xi,x> perturbation for nonsmooth kinds

    // methods and schedules
    std::vector<std::string> methods = {"zo-scgs", "zscg"};
    std::string regime = "smooth"; // | nonsmooth
    double epsilon = 0.1;
    long long budget = 1000000; // oracle evaluations
    long long fixed_batch = 0;  // 0 = theory batches
    int p = 1;
    std::string start = "vertex"; // | center
    long long max_inner = 0;      // CG cap; 0 = 10*d
    double gamma_override = 0.0;  // 0 = epsilon / (2 M2)

    // noise
    std::string noise = "none"; // | constant | sign_first | bounded_sine
    double noise_delta = 0.0;
    double noise_scale = 0.0; // bounded_sine wavelength; 0 = smoothing gamma

    // reporting
    std::string f_star_mode = "analytic"; // | reference
    std::filesystem::path out_dir = "out";
    bool emit_svg = true;

    void validate() const; // throws ConfigError

    /// Serializes every field as `key = value` lines (the config format).
    void serialize(std::ostream& out) const;
};

/// Parses line-oriented `key = value` text with `#` comments into overrides
/// on top of `base`. Unknown keys are ConfigErrors.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig parse_config_file(const std::filesystem::path& file, ExperimentConfig base = {});

/// Applies one `key=value` override (shared by config files and CLI flags).
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

} // namespace zopf
