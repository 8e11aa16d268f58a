#pragma once

#include "zopf/feasible_set.hpp"
#include "zopf/vec.hpp"

namespace zopf {

struct CgResult {
    Vec u;
    long long inner_iters = 0; // update steps executed before return
    long long lmo_calls = 0;   // inner_iters + 1 unless truncated
    bool truncated = false;    // hit max_inner with the gap test still failing
    double final_gap = 0.0;    // <g_t, u_t - v_t> at the return point
};

/// Conditional Gradient procedure: Frank-Wolfe on the quadratic model
/// <g0, u> + (eta/2) ||u - u0||_2^2 over the set, stopping when the duality
/// gap <g_t, u_t - v_t> drops to beta. Non-truncated returns certify
/// <g_u, u - lmo(g_u)> <= beta with g_u = g0 + eta (u - u0).
CgResult cg_procedure(const Vec& g0, const Vec& u0, double eta, double beta,
                      const FeasibleSet& set, long long max_inner);

} // namespace zopf
