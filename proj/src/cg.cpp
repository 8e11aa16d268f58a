#include "zopf/cg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zopf {

CgResult cg_procedure(const Vec& g0, const Vec& u0, double eta, double beta,
                      const FeasibleSet& set, long long max_inner) {
    require_finite(g0, "cg_procedure");
    require_dim(g0, set.dimension(), "cg_procedure");
    require_dim(u0, set.dimension(), "cg_procedure");
    if (!(eta > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("cg_procedure: eta and beta must be > 0");
    if (max_inner < 0)
        throw std::invalid_argument("cg_procedure: max_inner must be >= 0");

    Vec u = u0;
    Vec g = g0;
    for (long long t = 0;; ++t) {
        const Vec v = set.lmo(g);
        const double gap = g.dot(u - v);
        if (gap <= beta)
            return {u, t, t + 1, false, gap};
        if (t == max_inner)
            return {u, t, t + 1, true, gap};
        const double dist2 = (u - v).squaredNorm();
        const double alpha = dist2 > 0.0 ? std::min(gap / (eta * dist2), 1.0) : 1.0;
        u += alpha * (v - u);
        g = g0 + eta * (u - u0);
    }
}

} // namespace zopf
