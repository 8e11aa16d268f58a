#pragma once

#include <stdexcept>

namespace zopf {

enum class Regime { nonsmooth, smooth };

/// Problem constants consumed by the step-size / batch schedules.
struct ScheduleParams {
    Regime regime = Regime::nonsmooth;
    double epsilon = 0.0; // target accuracy
    double M = 0.0;       // Lipschitz constant of f in ||.||_p
    double M2 = 0.0;      // Lipschitz constant of f in ||.||_2
    double L = 0.0;       // gradient Lipschitz constant (smooth regime only)
    double D = 0.0;       // p-norm diameter of the feasible set
    int p = 2;            // norm index in {1,2}
    int d = 0;            // dimension

    /// Gradient Lipschitz constant of the smoothed surrogate in the
    /// non-smooth regime with gamma = epsilon/(2 M2): 2 sqrt(d) M M2 / epsilon.
    double derived_L() const;
};

struct ScheduleStep {
    double zeta = 0.0;
    double eta = 0.0;
    double beta = 0.0;
    long long B = 0;
};

/// Step sizes and batch size at outer iteration k >= 1.
///   nonsmooth: zeta = 3/(k+3), eta = 8 sqrt(d) M M2/(eps (k+3)),
///              beta = 2 sqrt(d) M M2 D^2/(eps (k+1)(k+2)),
///              B = ceil(min{q, ln d} d^{1-2/p} (k+3)^3 eps^2 / (M D)^2)
///   smooth:    zeta = 3/(k+3), eta = 4 L/(k+3), beta = L D^2/((k+1)(k+2)),
///              B = ceil(min{q, ln d} d^{2-2/p} M2^2 (k+3)^3 / (L D)^2)
ScheduleStep schedule(const ScheduleParams& params, long long k);

} // namespace zopf
