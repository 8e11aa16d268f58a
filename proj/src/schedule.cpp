#include "zopf/schedule.hpp"

#include "zopf/smoothing.hpp"

#include <cmath>

namespace zopf {

double ScheduleParams::derived_L() const {
    return 2.0 * std::sqrt(static_cast<double>(d)) * M * M2 / epsilon;
}

ScheduleStep schedule(const ScheduleParams& params, long long k) {
    if (k < 1)
        throw std::invalid_argument("schedule: k must be >= 1");
    if (params.d < 1 || !(params.epsilon > 0.0) || !(params.D > 0.0))
        throw std::invalid_argument("schedule: need d>=1, epsilon>0, D>0");
    if (params.p != 1 && params.p != 2)
        throw std::invalid_argument("schedule: p must be 1 or 2");

    const double dd = static_cast<double>(params.d);
    const double kk = static_cast<double>(k);
    const double mql = min_q_lnd(params.p, params.d);
    const double k3cubed = (kk + 3.0) * (kk + 3.0) * (kk + 3.0);

    ScheduleStep s;
    s.zeta = 3.0 / (kk + 3.0);

    double Braw = 0.0;
    if (params.regime == Regime::nonsmooth) {
        if (!(params.M > 0.0) || !(params.M2 > 0.0))
            throw std::invalid_argument("schedule: nonsmooth regime needs M>0, M2>0");
        const double sdMM2 = std::sqrt(dd) * params.M * params.M2;
        s.eta = 8.0 * sdMM2 / (params.epsilon * (kk + 3.0));
        s.beta = 2.0 * sdMM2 * params.D * params.D /
                 (params.epsilon * (kk + 1.0) * (kk + 2.0));
        Braw = mql * std::pow(dd, 1.0 - 2.0 / params.p) * k3cubed * params.epsilon *
               params.epsilon / (params.M * params.M * params.D * params.D);
    } else {
        if (!(params.L > 0.0) || !(params.M2 > 0.0))
            throw std::invalid_argument("schedule: smooth regime needs L>0, M2>0");
        s.eta = 4.0 * params.L / (kk + 3.0);
        s.beta = params.L * params.D * params.D / ((kk + 1.0) * (kk + 2.0));
        Braw = mql * std::pow(dd, 2.0 - 2.0 / params.p) * params.M2 * params.M2 * k3cubed /
               (params.L * params.L * params.D * params.D);
    }
    s.B = static_cast<long long>(std::ceil(Braw));
    if (s.B < 1)
        s.B = 1;
    return s;
}

} // namespace zopf
