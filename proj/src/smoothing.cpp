#include "zopf/smoothing.hpp"

#include "zopf/errors.hpp"
#include "zopf/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace zopf {

namespace {

void check_cfg(const SmoothingConfig& cfg) {
    if (!(cfg.gamma > 0.0))
        throw std::invalid_argument("smoothing: gamma must be > 0");
    if (cfg.p != 1 && cfg.p != 2)
        throw std::invalid_argument("smoothing: p must be 1 or 2");
}

} // namespace

double min_q_lnd(int p, int d) {
    const double lnd = std::log(static_cast<double>(d));
    if (p == 1)
        return lnd; // q = inf
    if (p == 2)
        return std::min(2.0, lnd);
    throw std::invalid_argument("min_q_lnd: p must be 1 or 2");
}

GradientEstimate estimate_gradient(const BlackBoxOracle& oracle, const Vec& x,
                                   const SmoothingConfig& cfg, long long batch,
                                   SeededStream& dir_stream, SeededStream& xi_stream) {
    check_cfg(cfg);
    if (batch < 1)
        throw std::invalid_argument("estimate_gradient: batch must be >= 1");
    const int d = oracle.dimension();
    require_dim(x, d, "estimate_gradient");

    // Pre-draw all randomness in index order; evaluation order is then free.
    std::vector<Vec> dirs;
    std::vector<RandomSeedDraw> xis;
    dirs.reserve(static_cast<std::size_t>(batch));
    xis.reserve(static_cast<std::size_t>(batch));
    for (long long i = 0; i < batch; ++i) {
        dirs.push_back(sample_sphere(dir_stream, d));
        xis.push_back(xi_stream.draw().next_u64());
    }

    const double scale = static_cast<double>(d) / (2.0 * cfg.gamma);
    Vec g = Vec::Zero(d);
    for (long long i = 0; i < batch; ++i) {
        const Vec& e = dirs[static_cast<std::size_t>(i)];
        const RandomSeedDraw xi = xis[static_cast<std::size_t>(i)];
        const double fp = oracle.evaluate(x + cfg.gamma * e, xi).value;
        const double fm = oracle.evaluate(x - cfg.gamma * e, xi).value;
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw NumericError("estimate_gradient: non-finite oracle value at direction " +
                               std::to_string(i));
        g += (scale * (fp - fm)) * e;
    }
    g /= static_cast<double>(batch);
    return {std::move(g), batch, 2 * batch};
}

double smoothed_value(const BlackBoxOracle& oracle, const Vec& x, const SmoothingConfig& cfg,
                      long long samples, SeededStream& ball_stream, SeededStream& xi_stream) {
    check_cfg(cfg);
    if (samples < 1)
        throw std::invalid_argument("smoothed_value: samples must be >= 1");
    const int d = oracle.dimension();
    require_dim(x, d, "smoothed_value");

    double sum = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const Vec shift = sample_ball(ball_stream, d);
        const RandomSeedDraw xi = xi_stream.draw().next_u64();
        const double v = oracle.evaluate(x + cfg.gamma * shift, xi).value;
        if (!std::isfinite(v))
            throw NumericError("smoothed_value: non-finite oracle value at sample " +
                               std::to_string(i));
        sum += v;
    }
    return sum / static_cast<double>(samples);
}

TheoreticalConstants theoretical_constants(const SmoothingConfig& cfg, int d, double M,
                                           double M2, double Delta) {
    check_cfg(cfg);
    if (d < 1 || !(M > 0.0) || !(M2 > 0.0) || Delta < 0.0)
        throw std::invalid_argument("theoretical_constants: need d>=1, M>0, M2>0, Delta>=0");

    const double dd = static_cast<double>(d);
    const double mql = min_q_lnd(cfg.p, d);
    const double sqrt2 = std::sqrt(2.0);

    TheoreticalConstants out;
    out.L_fgamma = std::sqrt(dd) * M / cfg.gamma;
    out.kappa = sqrt2 * mql * std::pow(dd, 1.0 - 2.0 / cfg.p);
    out.second_moment_bound =
        out.kappa * (dd * M2 * M2 + dd * dd * Delta * Delta / (sqrt2 * cfg.gamma * cfg.gamma));
    out.sigma2_bound = 2.0 * sqrt2 * mql * std::pow(dd, 2.0 - 2.0 / cfg.p) * M2 * M2;
    return out;
}

} // namespace zopf
