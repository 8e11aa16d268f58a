#pragma once

#include "zopf/oracle.hpp"
#include "zopf/rng.hpp"
#include "zopf/vec.hpp"

namespace zopf {

/// Parameters of the l2 randomized smoothing f_gamma(x) = E[f(x + gamma*e~)].
struct SmoothingConfig {
    double gamma = 0.0; // smoothing radius > 0
    int p = 2;          // norm index in {1,2}; conjugate q = p/(p-1), q=inf for p=1

    SmoothingConfig(double gamma_, int p_) : gamma(gamma_), p(p_) {}
};

/// Batched two-point central-difference gradient estimate.
struct GradientEstimate {
    Vec g;
    long long batch = 0;        // number of directions B
    long long oracle_calls = 0; // exactly 2*B
};

/// g = (1/B) sum_i (d/(2 gamma)) (f_d(x+gamma e_i, xi_i) - f_d(x-gamma e_i, xi_i)) e_i
/// with e_i uniform on the unit sphere. Consumes exactly 2B oracle evaluations.
/// All (e_i, xi_i) are pre-drawn in index order, so the result is bit-stable.
GradientEstimate estimate_gradient(const BlackBoxOracle& oracle, const Vec& x,
                                   const SmoothingConfig& cfg, long long batch,
                                   SeededStream& dir_stream, SeededStream& xi_stream);

/// Monte-Carlo value of the smoothed objective: mean of f_d(x + gamma*e~_i, xi_i)
/// over n unit-ball draws. Consumes n oracle evaluations.
double smoothed_value(const BlackBoxOracle& oracle, const Vec& x, const SmoothingConfig& cfg,
                      long long samples, SeededStream& ball_stream, SeededStream& xi_stream);

struct TheoreticalConstants {
    double L_fgamma = 0.0;           // sqrt(d) M / gamma
    double kappa = 0.0;              // sqrt(2) min{q, ln d} d^{1-2/p}
    double second_moment_bound = 0.0; // kappa (d M2^2 + d^2 Delta^2 / (sqrt(2) gamma^2))
    double sigma2_bound = 0.0;        // 2 sqrt(2) min{q, ln d} d^{2-2/p} M2^2
};

TheoreticalConstants theoretical_constants(const SmoothingConfig& cfg, int d, double M,
                                           double M2, double Delta);

/// min{q, ln d} with q conjugate to p (q = inf for p = 1).
double min_q_lnd(int p, int d);

} // namespace zopf
