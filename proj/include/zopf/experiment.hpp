#pragma once

#include "zopf/config.hpp"
#include "zopf/feasible_set.hpp"
#include "zopf/problems.hpp"
#include "zopf/solvers.hpp"
#include "zopf/trace.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zopf {

/// Everything derived from a config that runs share: the instance, its
/// oracle-ready constants, schedule parameters, and the start point.
struct PreparedProblem {
    FeasibleSet set;
    ScheduleParams params;
    double gamma = 0.0; // smoothing radius used by both methods
    NoiseModel noise;
    Vec x0;
    TraceObjective report;
    std::string f_star_source; // "analytic" or "reference"
    std::shared_ptr<const QuadraticSimplexInstance> quadratic; // engaged for that kind
    std::shared_ptr<const NonsmoothInstance> nonsmooth;

    std::unique_ptr<BlackBoxOracle> make_oracle() const;
};

PreparedProblem prepare_problem(const ExperimentConfig& cfg);

/// One solver execution on a fresh oracle with role-separated streams derived
/// from cfg.seed. fixed_batch = 0 means theory batches.
SolverResult execute_run(const PreparedProblem& prob, const ExperimentConfig& cfg,
                         const std::string& method, long long fixed_batch);

struct RunOutcome {
    std::string label;
    std::filesystem::path csv; // empty when failed
    RunTrace trace;
    bool failed = false;
    std::string error;
};

struct ExperimentResult {
    std::filesystem::path out_dir;
    std::vector<RunOutcome> runs;
};

/// Runs every configured method at the configured batch mode, writes one CSV
/// per run plus convergence SVGs, and returns the traces. Deterministic given
/// the config (byte-identical CSVs on re-run).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Figure-3 style sweep: for each method, one run per fixed batch value plus
/// the theory schedule, with a combined per-method plot. A batch that cannot
/// fit the budget fails that run only; the sweep continues.
ExperimentResult sweep_batch(const ExperimentConfig& cfg, const std::vector<long long>& batches);

std::string batch_tag(long long fixed_batch);

} // namespace zopf
