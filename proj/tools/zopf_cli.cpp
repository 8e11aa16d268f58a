// Experiment runner: reproduces the quadratic-over-simplex comparisons
// (method comparison, fixed-batch runs, batch-size sweeps) as CSV + SVG.

#include "zopf/config.hpp"
#include "zopf/errors.hpp"
#include "zopf/experiment.hpp"
#include "zopf/svg.hpp"
#include "zopf/trace_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CommonFlags {
    std::string config_file;
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_file, "config file (key = value lines, # comments)");
    auto push = [&flags](const std::string& key) {
        return [&flags, key](const std::string& v) { flags.overrides.emplace_back(key, v); };
    };
    cmd->add_option_function<std::string>("--seed", push("seed"), "stream seed");
    cmd->add_option_function<std::string>("--budget", push("budget"),
                                          "oracle evaluation budget");
    cmd->add_option_function<std::string>("--dim", push("dim"), "problem dimension");
    cmd->add_option_function<std::string>("--method", push("methods"),
                                          "comma list from {zo-scgs,zscg}");
    cmd->add_option_function<std::string>("--batch", push("batch"),
                                          "'theory' or a fixed batch size");
    cmd->add_option_function<std::string>("--out", push("out"), "output directory");
    cmd->add_option_function<std::string>("--problem", push("problem"),
                                          "quadratic_simplex | l1_distance | max_affine");
    cmd->add_option_function<std::string>("--regime", push("regime"), "smooth | nonsmooth");
    cmd->add_option_function<std::string>("--epsilon", push("epsilon"), "target accuracy");
    cmd->add_option_function<std::string>("--p", push("p"), "norm index, 1 or 2");
    cmd->add_option_function<std::string>("--noise", push("noise"),
                                          "none | constant | sign_first | bounded_sine");
    cmd->add_option_function<std::string>("--noise-delta", push("noise_delta"),
                                          "adversarial noise bound");
    cmd->add_option_function<std::string>("--start", push("start"), "vertex | center");
}

zopf::ExperimentConfig build_config(const CommonFlags& flags) {
    zopf::ExperimentConfig cfg;
    if (!flags.config_file.empty())
        cfg = zopf::parse_config_file(flags.config_file, cfg);
    for (const auto& [key, value] : flags.overrides)
        zopf::apply_config_entry(cfg, key, value);
    cfg.validate();
    return cfg;
}

int report_runs(const zopf::ExperimentResult& result) {
    int ok = 0;
    for (const auto& run : result.runs) {
        if (run.failed) {
            std::cerr << "FAILED  " << run.label << ": " << run.error << "\n";
        } else {
            const auto& last = run.trace.rows.back();
            std::cout << run.label << ": " << last.k << " iterations, " << last.evaluations
                      << " evaluations, final gap " << last.gap << " -> " << run.csv.string()
                      << "\n";
            ++ok;
        }
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zopf: zero-order projection-free convex optimization experiments"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "run the configured methods once");
    add_common(run_cmd, run_flags);

    CommonFlags sweep_flags;
    std::vector<long long> sweep_values;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "batch-size sweep plus the theory schedule");
    add_common(sweep_cmd, sweep_flags);
    sweep_cmd->add_option("--values", sweep_values, "fixed batch sizes to sweep")
        ->delimiter(',');

    std::vector<std::string> plot_inputs;
    std::string plot_axes = "vs_evaluations";
    std::string plot_out = "plot.svg";
    bool plot_log_y = false;
    CLI::App* plot_cmd = app.add_subcommand("plot", "render trace CSVs as an SVG chart");
    plot_cmd->add_option("traces", plot_inputs, "trace CSV files")->required();
    plot_cmd->add_option("--axes", plot_axes, "vs_evaluations | vs_iterations");
    plot_cmd->add_flag("--log-y", plot_log_y, "logarithmic gap axis");
    plot_cmd->add_option("--out", plot_out, "output SVG file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            const auto cfg = build_config(run_flags);
            const auto result = zopf::run_experiment(cfg);
            return report_runs(result) > 0 ? 0 : 2;
        }
        if (sweep_cmd->parsed()) {
            const auto cfg = build_config(sweep_flags);
            if (sweep_values.empty())
                throw zopf::ConfigError("sweep: --values must list at least one batch size");
            const auto result = zopf::sweep_batch(cfg, sweep_values);
            return report_runs(result) > 0 ? 0 : 2;
        }
        if (plot_cmd->parsed()) {
            std::vector<zopf::RunTrace> traces;
            for (const auto& file : plot_inputs)
                traces.push_back(zopf::read_trace_csv(file));
            zopf::PlotSpec spec;
            if (plot_axes == "vs_evaluations")
                spec.axis = zopf::PlotAxis::vs_evaluations;
            else if (plot_axes == "vs_iterations")
                spec.axis = zopf::PlotAxis::vs_iterations;
            else
                throw zopf::ConfigError("plot: unknown axes '" + plot_axes + "'");
            spec.log_y = plot_log_y;
            zopf::emit_plot(traces, spec, plot_out);
            std::cout << "wrote " << plot_out << "\n";
            return 0;
        }
    } catch (const zopf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
