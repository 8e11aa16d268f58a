#include "zopf/experiment.hpp"

#include "zopf/errors.hpp"
#include "zopf/svg.hpp"
#include "zopf/trace_io.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <limits>

namespace zopf {

namespace {

NoiseModel make_noise(const ExperimentConfig& cfg, double gamma) {
    if (cfg.noise == "none" || cfg.noise_delta == 0.0)
        return NoiseModel::none();
    if (cfg.noise == "constant")
        return NoiseModel::constant(cfg.noise_delta);
    if (cfg.noise == "sign_first")
        return NoiseModel::sign_first(cfg.noise_delta);
    const double scale = cfg.noise_scale > 0.0 ? cfg.noise_scale : gamma;
    return NoiseModel::sine(cfg.noise_delta, scale);
}

Vec start_point(const ExperimentConfig& cfg) {
    Vec x0 = Vec::Zero(cfg.dim);
    if (cfg.start == "center")
        x0.setConstant(1.0 / static_cast<double>(cfg.dim));
    else
        x0[0] = 1.0;
    return x0;
}

double reference_f_star(const PreparedProblem& prob, const ExperimentConfig& cfg);

} // namespace

std::unique_ptr<BlackBoxOracle> PreparedProblem::make_oracle() const {
    if (quadratic)
        return quadratic->make_oracle(noise);
    return nonsmooth->make_oracle(noise);
}

PreparedProblem prepare_problem(const ExperimentConfig& cfg) {
    cfg.validate();

    ScheduleParams params;
    params.regime = cfg.regime == "smooth" ? Regime::smooth : Regime::nonsmooth;
    params.epsilon = cfg.epsilon;
    params.p = cfg.p;
    params.d = cfg.dim;

    PreparedProblem prob{FeasibleSet::simplex(cfg.dim), params, 0.0, {}, start_point(cfg), {},
                         "analytic",                    nullptr, nullptr};
    params.D = prob.set.diameter(cfg.p);

    if (cfg.problem == "quadratic_simplex") {
        auto inst = std::make_shared<QuadraticSimplexInstance>(
            gen_quadratic_simplex(cfg.dim, cfg.lambda_min, cfg.lambda_max, cfg.seed));
        // Two passes: the Q_gamma slack in M2 depends on gamma = eps/(2 M2).
        const InstanceConstants c0 = inst->constants(0.0);
        const double gamma0 = cfg.epsilon / (2.0 * c0.M2);
        const InstanceConstants c = inst->constants(gamma0);
        params.M = c.M(cfg.p);
        params.M2 = c.M2;
        params.L = c.L(cfg.p);
        prob.report.f = [inst](const Vec& x) { return inst->value(x); };
        prob.report.f_star = inst->f_star;
        prob.quadratic = inst;
    } else {
        const auto kind = cfg.problem == "l1_distance" ? NonsmoothInstance::Kind::l1_distance
                                                       : NonsmoothInstance::Kind::max_affine;
        auto inst = std::make_shared<NonsmoothInstance>(gen_nonsmooth(
            kind, cfg.dim, cfg.seed, cfg.max_affine_pieces, cfg.stochastic_half_width));
        const InstanceConstants c = inst->constants(0.0);
        params.M = c.M(cfg.p);
        params.M2 = c.M2;
        params.L = 0.0;
        prob.report.f = [inst](const Vec& x) { return inst->value(x); };
        prob.report.f_star = inst->f_star;
        prob.nonsmooth = inst;
    }

    prob.gamma = cfg.gamma_override > 0.0 ? cfg.gamma_override : cfg.epsilon / (2.0 * params.M2);
    prob.params = params;
    prob.noise = make_noise(cfg, prob.gamma);

    if (cfg.f_star_mode == "reference") {
        prob.report.f_star = reference_f_star(prob, cfg);
        prob.f_star_source = "reference";
        std::cerr << "note: gap column uses a reference solve for f*, not an analytic value\n";
    }
    return prob;
}

SolverResult execute_run(const PreparedProblem& prob, const ExperimentConfig& cfg,
                         const std::string& method, long long fixed_batch) {
    auto oracle = prob.make_oracle();
    SolverStreams streams{SeededStream(cfg.seed, stream_role::directions),
                          SeededStream(cfg.seed, stream_role::stochastic)};
    const long long no_cap = std::numeric_limits<long long>::max();

    if (method == "zo-scgs") {
        SolverOptions opt;
        opt.fixed_batch = fixed_batch;
        opt.gamma_override = prob.gamma;
        opt.max_inner = cfg.max_inner;
        return zo_scgs(*oracle, prob.set, prob.params, prob.x0, no_cap, cfg.budget, streams,
                       prob.report, opt);
    }
    if (method == "zscg") {
        ZscgOptions opt;
        opt.gamma = prob.gamma;
        BatchSchedule batches;
        if (fixed_batch > 0) {
            batches = [fixed_batch](long long) { return fixed_batch; };
        } else {
            const double L_eff = prob.params.regime == Regime::smooth ? prob.params.L
                                                                      : prob.params.derived_L();
            batches = zscg_theory_batches(cfg.p, cfg.dim, prob.params.M2, L_eff, prob.params.D);
        }
        return zscg_baseline(*oracle, prob.set, prob.x0, no_cap, cfg.budget, batches, streams,
                             prob.report, opt);
    }
    throw ConfigError("unknown method '" + method + "'");
}

namespace {

double reference_f_star(const PreparedProblem& prob, const ExperimentConfig& cfg) {
    ExperimentConfig ref = cfg;
    ref.budget = cfg.budget * 100;
    ref.f_star_mode = "analytic";
    PreparedProblem p2 = prob;
    p2.report.f_star = 0.0; // gap column unused here
    SolverResult res = execute_run(p2, ref, "zo-scgs", 0);
    double best = std::numeric_limits<double>::infinity();
    for (const TraceRow& r : res.trace.rows)
        best = std::min(best, r.f_value);
    return best;
}

std::string run_label(const std::string& method, long long fixed_batch) {
    return method + "_" + batch_tag(fixed_batch);
}

RunOutcome one_run(const PreparedProblem& prob, const ExperimentConfig& cfg,
                   const std::string& method, long long fixed_batch) {
    RunOutcome out;
    out.label = run_label(method, fixed_batch);
    try {
        SolverResult res = execute_run(prob, cfg, method, fixed_batch);
        out.trace = std::move(res.trace);
        out.trace.label = out.label;
    } catch (const BudgetError& e) {
        out.failed = true;
        out.error = e.what();
    }
    return out;
}

void write_outputs(ExperimentResult& result, const ExperimentConfig& cfg,
                   const PreparedProblem& prob) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);

    {
        std::ofstream meta(cfg.out_dir / "experiment.cfg");
        if (!meta)
            throw ConfigError("cannot write to output directory: " + cfg.out_dir.string());
        cfg.serialize(meta);
    }
    if (prob.quadratic) {
        std::ofstream rec(cfg.out_dir / "instance.txt");
        prob.quadratic->serialize(rec);
        rec << "f_star_source = " << prob.f_star_source << "\n";
    }

    for (RunOutcome& run : result.runs) {
        if (run.failed) {
            std::cerr << "run " << run.label << " failed: " << run.error << "\n";
            continue;
        }
        run.csv = cfg.out_dir / (run.label + ".csv");
        write_trace_csv(run.trace, run.csv);
    }
}

} // namespace

std::string batch_tag(long long fixed_batch) {
    return fixed_batch > 0 ? "fixed" + std::to_string(fixed_batch) : "theory";
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const PreparedProblem prob = prepare_problem(cfg);

    ExperimentResult result;
    result.out_dir = cfg.out_dir;

    // Runs are independent (own oracle instance, own streams): execute in parallel.
    std::vector<std::future<RunOutcome>> jobs;
    for (const std::string& method : cfg.methods)
        jobs.push_back(std::async(std::launch::async, [&prob, &cfg, method] {
            return one_run(prob, cfg, method, cfg.fixed_batch);
        }));
    for (auto& job : jobs)
        result.runs.push_back(job.get());

    write_outputs(result, cfg, prob);

    if (cfg.emit_svg) {
        std::vector<RunTrace> traces;
        for (const RunOutcome& run : result.runs)
            if (!run.failed)
                traces.push_back(run.trace);
        if (!traces.empty()) {
            emit_plot(traces, {PlotAxis::vs_evaluations, true, "gap vs oracle evaluations"},
                      cfg.out_dir / "gap_vs_evaluations.svg");
            emit_plot(traces, {PlotAxis::vs_iterations, true, "gap vs iterations"},
                      cfg.out_dir / "gap_vs_iterations.svg");
        }
    }
    return result;
}

ExperimentResult sweep_batch(const ExperimentConfig& cfg, const std::vector<long long>& batches) {
    if (batches.empty())
        throw ConfigError("sweep: need a non-empty batch list");
    const PreparedProblem prob = prepare_problem(cfg);

    ExperimentResult result;
    result.out_dir = cfg.out_dir;

    std::vector<std::future<RunOutcome>> jobs;
    for (const std::string& method : cfg.methods) {
        for (long long b : batches)
            jobs.push_back(std::async(std::launch::async, [&prob, &cfg, method, b] {
                return one_run(prob, cfg, method, b);
            }));
        jobs.push_back(std::async(std::launch::async, [&prob, &cfg, method] {
            return one_run(prob, cfg, method, 0);
        }));
    }
    for (auto& job : jobs)
        result.runs.push_back(job.get());

    write_outputs(result, cfg, prob);

    if (cfg.emit_svg) {
        for (const std::string& method : cfg.methods) {
            std::vector<RunTrace> traces;
            for (const RunOutcome& run : result.runs)
                if (!run.failed && run.label.rfind(method + "_", 0) == 0)
                    traces.push_back(run.trace);
            if (!traces.empty())
                emit_plot(traces, {PlotAxis::vs_evaluations, true, "batch-size sweep: " + method},
                          cfg.out_dir / ("sweep_" + method + ".svg"));
        }
    }
    return result;
}

} // namespace zopf
