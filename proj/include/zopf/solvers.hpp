#pragma once

#include "zopf/cg.hpp"
#include "zopf/feasible_set.hpp"
#include "zopf/oracle.hpp"
#include "zopf/schedule.hpp"
#include "zopf/smoothing.hpp"
#include "zopf/trace.hpp"

#include <functional>
#include <limits>

namespace zopf {

/// Noiseless exact objective used only to fill trace rows; never counted
/// against the oracle budget.
struct TraceObjective {
    std::function<double(const Vec&)> f;
    double f_star = 0.0;
};

struct SolverStreams {
    SeededStream directions;
    SeededStream xi;
};

struct SolverOptions {
    long long fixed_batch = 0;   // 0 = theoretical B_k from the schedule
    double gamma_override = 0.0; // 0 = epsilon / (2 M2)
    long long max_inner = 0;     // 0 = 10 * d
};

struct SolverResult {
    Vec x;
    RunTrace trace;
    long long outer_iterations = 0;
    long long cg_truncations = 0;
};

/// Zero-order stochastic conditional gradient sliding. Runs until N outer
/// iterations or until the next batch would exceed the evaluation budget
/// (batches are all-or-nothing). Throws BudgetError if the first batch does
/// not fit.
SolverResult zo_scgs(const BlackBoxOracle& oracle, const FeasibleSet& set,
                     const ScheduleParams& params, const Vec& x0, long long max_outer,
                     long long eval_budget, SolverStreams& streams,
                     const TraceObjective& report, const SolverOptions& opt = {});

/// Batch size per outer iteration of the baseline.
using BatchSchedule = std::function<long long(long long k)>;

struct ZscgOptions {
    double gamma = 0.0; // forward-difference step; must be > 0
    std::function<double(long long k)> alpha; // default 2/(k+2)
};

/// Zeroth-order stochastic conditional gradient baseline: stochastic
/// Frank-Wolfe with a batched forward-difference estimator
/// (d/gamma)(f_d(x+gamma e, xi) - f_d(x, xi)) e, one LMO call per iteration.
/// One direction costs 2 evaluations (displaced point plus base point).
SolverResult zscg_baseline(const BlackBoxOracle& oracle, const FeasibleSet& set, const Vec& x0,
                           long long max_outer, long long eval_budget,
                           const BatchSchedule& batch_schedule, SolverStreams& streams,
                           const TraceObjective& report, const ZscgOptions& opt);

/// Theoretical ZSCG batch growth: ceil(kappa(p,d) d M2^2 (k+2)^2 / (L D)^2),
/// sized so the batched estimator error matches the 2/(k+2) step schedule.
BatchSchedule zscg_theory_batches(int p, int d, double M2, double L, double D);

} // namespace zopf
