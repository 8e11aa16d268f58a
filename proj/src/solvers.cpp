#include "zopf/solvers.hpp"

#include "zopf/errors.hpp"
#include "zopf/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace zopf {

namespace {

constexpr double kFeasTol = 1e-9;

void push_row(RunTrace& trace, long long k, long long directions, long long lmo_calls,
              const TraceObjective& report, const Vec& x) {
    TraceRow row;
    row.k = k;
    row.directions = directions;
    row.evaluations = 2 * directions;
    row.lmo_calls = lmo_calls;
    row.f_value = report.f(x);
    row.gap = row.f_value - report.f_star;
    trace.rows.push_back(row);
}

} // namespace

SolverResult zo_scgs(const BlackBoxOracle& oracle, const FeasibleSet& set,
                     const ScheduleParams& params, const Vec& x0, long long max_outer,
                     long long eval_budget, SolverStreams& streams,
                     const TraceObjective& report, const SolverOptions& opt) {
    const int d = set.dimension();
    require_dim(x0, d, "zo_scgs");
    if (!set.contains(x0, kFeasTol))
        throw std::invalid_argument("zo_scgs: x0 is not feasible");
    if (max_outer < 1)
        throw std::invalid_argument("zo_scgs: need at least one iteration");
    if (!report.f)
        throw std::invalid_argument("zo_scgs: trace objective is required");

    const double gamma =
        opt.gamma_override > 0.0 ? opt.gamma_override : params.epsilon / (2.0 * params.M2);
    const SmoothingConfig smoothing(gamma, params.p);
    const long long max_inner = opt.max_inner > 0 ? opt.max_inner : 10LL * d;

    SolverResult res;
    res.trace.label = "zo-scgs";
    Vec x = x0;
    Vec y = x0;
    long long directions = 0;
    long long lmo_calls = 0;

    for (long long k = 1; k <= max_outer; ++k) {
        ScheduleStep step = schedule(params, k);
        const long long B = opt.fixed_batch > 0 ? opt.fixed_batch : step.B;
        if (2 * directions + 2 * B > eval_budget) {
            if (k == 1)
                throw BudgetError("zo_scgs: budget " + std::to_string(eval_budget) +
                                  " cannot fit the first batch (needs " + std::to_string(2 * B) +
                                  " evaluations)");
            res.trace.stopped_on_budget = true;
            break;
        }

        const Vec z = (1.0 - step.zeta) * x + step.zeta * y;
        GradientEstimate est =
            estimate_gradient(oracle, z, smoothing, B, streams.directions, streams.xi);
        CgResult cg = cg_procedure(est.g, y, step.eta, step.beta, set, max_inner);
        if (cg.truncated)
            ++res.cg_truncations;
        y = cg.u;
        x = (1.0 - step.zeta) * x + step.zeta * y;

        directions += B;
        lmo_calls += cg.lmo_calls;
        ++res.outer_iterations;
        push_row(res.trace, k, directions, lmo_calls, report, x);
    }

    res.x = std::move(x);
    return res;
}

SolverResult zscg_baseline(const BlackBoxOracle& oracle, const FeasibleSet& set, const Vec& x0,
                           long long max_outer, long long eval_budget,
                           const BatchSchedule& batch_schedule, SolverStreams& streams,
                           const TraceObjective& report, const ZscgOptions& opt) {
    const int d = set.dimension();
    require_dim(x0, d, "zscg_baseline");
    if (!set.contains(x0, kFeasTol))
        throw std::invalid_argument("zscg_baseline: x0 is not feasible");
    if (max_outer < 1)
        throw std::invalid_argument("zscg_baseline: need at least one iteration");
    if (!(opt.gamma > 0.0))
        throw std::invalid_argument("zscg_baseline: gamma must be > 0");
    if (!batch_schedule)
        throw std::invalid_argument("zscg_baseline: batch schedule is required");
    if (!report.f)
        throw std::invalid_argument("zscg_baseline: trace objective is required");

    SolverResult res;
    res.trace.label = "zscg";
    Vec x = x0;
    long long directions = 0;
    long long lmo_calls = 0;
    const double fd_scale = static_cast<double>(d) / opt.gamma;

    for (long long k = 1; k <= max_outer; ++k) {
        const long long B = batch_schedule(k);
        if (B < 1)
            throw std::invalid_argument("zscg_baseline: batch schedule returned B < 1");
        if (2 * directions + 2 * B > eval_budget) {
            if (k == 1)
                throw BudgetError("zscg_baseline: budget " + std::to_string(eval_budget) +
                                  " cannot fit the first batch (needs " + std::to_string(2 * B) +
                                  " evaluations)");
            res.trace.stopped_on_budget = true;
            break;
        }

        // Pre-draw, then evaluate the forward pair f(x + gamma e) and f(x)
        // with common xi per direction.
        std::vector<Vec> dirs;
        std::vector<RandomSeedDraw> xis;
        dirs.reserve(static_cast<std::size_t>(B));
        xis.reserve(static_cast<std::size_t>(B));
        for (long long i = 0; i < B; ++i) {
            dirs.push_back(sample_sphere(streams.directions, d));
            xis.push_back(streams.xi.draw().next_u64());
        }
        Vec g = Vec::Zero(d);
        for (long long i = 0; i < B; ++i) {
            const Vec& e = dirs[static_cast<std::size_t>(i)];
            const double fp = oracle.evaluate(x + opt.gamma * e, xis[i]).value;
            const double f0 = oracle.evaluate(x, xis[i]).value;
            if (!std::isfinite(fp) || !std::isfinite(f0))
                throw NumericError("zscg_baseline: non-finite oracle value at direction " +
                                   std::to_string(i));
            g += (fd_scale * (fp - f0)) * e;
        }
        g /= static_cast<double>(B);

        const Vec v = set.lmo(g);
        const double alpha =
            opt.alpha ? opt.alpha(k) : 2.0 / (static_cast<double>(k) + 2.0);
        x = (1.0 - alpha) * x + alpha * v;

        directions += B;
        lmo_calls += 1;
        ++res.outer_iterations;
        push_row(res.trace, k, directions, lmo_calls, report, x);
    }

    res.x = std::move(x);
    return res;
}

BatchSchedule zscg_theory_batches(int p, int d, double M2, double L, double D) {
    if (!(M2 > 0.0) || !(L > 0.0) || !(D > 0.0))
        throw std::invalid_argument("zscg_theory_batches: need M2, L, D > 0");
    const double dd = static_cast<double>(d);
    const double kappa = std::sqrt(2.0) * min_q_lnd(p, d) * std::pow(dd, 1.0 - 2.0 / p);
    const double c = kappa * dd * M2 * M2 / (L * L * D * D);
    return [c](long long k) {
        const double kk = static_cast<double>(k);
        const long long B = static_cast<long long>(std::ceil(c * (kk + 2.0) * (kk + 2.0)));
        return B < 1 ? 1 : B;
    };
}

} // namespace zopf
