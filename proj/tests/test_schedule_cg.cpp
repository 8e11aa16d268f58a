#include "zopf/cg.hpp"
#include "zopf/rng.hpp"
#include "zopf/sampling.hpp"
#include "zopf/schedule.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace zopf;

namespace {

ScheduleParams paper_params(Regime regime) {
    ScheduleParams p;
    p.regime = regime;
    p.epsilon = 0.1;
    p.M = 1.0;
    p.M2 = 1.0;
    p.L = 5.0;
    p.D = std::sqrt(2.0);
    p.p = 2;
    p.d = 100;
    return p;
}

} // namespace

TEST_CASE("schedule: spot values at k = 1 (nonsmooth, p = 2, d = 100)") {
    ScheduleParams sp = paper_params(Regime::nonsmooth);
    ScheduleStep s = schedule(sp, 1);
    CHECK(s.zeta == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s.eta == doctest::Approx(200.0).epsilon(1e-12)); // 8 sqrt(100)/(0.1 * 4)
    CHECK(s.B == 1); // ceil(2 * 1 * 64 * 0.01 / 2) = ceil(0.64)
    CHECK(s.beta == doctest::Approx(2.0 * 10.0 * 2.0 / (0.1 * 2.0 * 3.0)).epsilon(1e-12));
}

TEST_CASE("schedule: smooth regime formulas") {
    ScheduleParams sp = paper_params(Regime::smooth);
    ScheduleStep s = schedule(sp, 2);
    CHECK(s.zeta == doctest::Approx(3.0 / 5.0));
    CHECK(s.eta == doctest::Approx(4.0 * 5.0 / 5.0));
    CHECK(s.beta == doctest::Approx(5.0 * 2.0 / (3.0 * 4.0)));
    // B = ceil(min{q,ln d} d^{2-2/p} M2^2 (k+3)^3 / (L D)^2) = ceil(2*100*125/50)
    CHECK(s.B == 500);
}

TEST_CASE("schedule: B >= 1 always, k >= 1 enforced, p validated") {
    ScheduleParams sp = paper_params(Regime::nonsmooth);
    sp.epsilon = 1e-6; // makes the raw batch formula tiny
    CHECK(schedule(sp, 1).B == 1);
    CHECK_THROWS_AS(schedule(sp, 0), std::invalid_argument);
    sp.p = 3;
    CHECK_THROWS_AS(schedule(sp, 1), std::invalid_argument);
}

TEST_CASE("schedule: sum of k^3 tracks N^4/4 within 10% for N >= 20") {
    for (long long N : {20LL, 33LL, 50LL}) {
        double sum = 0.0;
        for (long long k = 1; k <= N; ++k)
            sum += static_cast<double>(k) * k * k;
        const double approx = 0.25 * std::pow(static_cast<double>(N), 4.0);
        CHECK(std::abs(approx - sum) / sum <= 0.10);
    }
}

TEST_CASE("schedule: oracle accounting identity against the closed form") {
    // Total directions = sum B_k; with B_k = ceil(c (k+3)^3) this matches
    // c * sum (k+3)^3 up to the ceiling slack (at most N draws).
    ScheduleParams sp = paper_params(Regime::nonsmooth);
    const long long N = 40;
    long long total = 0;
    double raw = 0.0;
    const double c = 2.0 * 1.0 * sp.epsilon * sp.epsilon / (sp.M * sp.M * sp.D * sp.D);
    for (long long k = 1; k <= N; ++k) {
        total += schedule(sp, k).B;
        raw += c * std::pow(static_cast<double>(k) + 3.0, 3.0);
    }
    CHECK(static_cast<double>(total) >= raw);
    CHECK(static_cast<double>(total) <= raw + static_cast<double>(N));
}

TEST_CASE("cg_procedure: hand-traced 1-D example returns 0 exactly") {
    FeasibleSet box = FeasibleSet::box(1, 0.0, 1.0);
    Vec g0(1), u0(1);
    g0 << 1.0;
    u0 << 1.0;
    CgResult r = cg_procedure(g0, u0, 1.0, 0.1, box, 100);
    CHECK(r.u[0] == 0.0);
    CHECK(r.inner_iters == 1);
    CHECK(r.lmo_calls == 2);
    CHECK_FALSE(r.truncated);
    CHECK(r.final_gap == 0.0);
}

TEST_CASE("cg_procedure: immediate return when u0 already satisfies the gap test") {
    FeasibleSet sx = FeasibleSet::simplex(4);
    Vec g0(4);
    g0 << 0.0, 1.0, 2.0, 3.0;
    Vec u0 = sx.lmo(g0); // vertex already minimizing <g0, .>
    CgResult r = cg_procedure(g0, u0, 2.0, 1e-9, sx, 100);
    CHECK((r.u - u0).norm() == 0.0);
    CHECK(r.inner_iters == 0);
    CHECK(r.lmo_calls == 1);

    // beta at least the entry gap also returns u0 untouched
    Vec far = Vec::Zero(4);
    far[3] = 1.0;
    const double entry_gap = g0.dot(far - sx.lmo(g0));
    CgResult r2 = cg_procedure(g0, far, 2.0, entry_gap + 1e-12, sx, 100);
    CHECK((r2.u - far).norm() == 0.0);
    CHECK(r2.lmo_calls == 1);
}

TEST_CASE("cg_procedure: exit certificate on random problems over three sets") {
    SeededStream s(71, stream_role::test_aux);
    const FeasibleSet sets[] = {FeasibleSet::simplex(6), FeasibleSet::box(6, -1.0, 0.5),
                                FeasibleSet::l2_ball(6, 1.2)};
    int non_truncated = 0;
    for (const FeasibleSet& q : sets) {
        for (int i = 0; i < 200; ++i) {
            DrawKit kit = s.draw();
            Vec g0 = 4.0 * sample_sphere(s, 6);
            Vec u0 = q.random_member(s);
            const double eta = std::exp(kit.uniform(std::log(0.1), std::log(10.0)));
            const double beta = std::exp(kit.uniform(std::log(1e-6), 0.0));
            CgResult r = cg_procedure(g0, u0, eta, beta, q, 2000);
            CHECK(q.contains(r.u, 1e-9));
            if (r.truncated)
                continue;
            ++non_truncated;
            const Vec gu = g0 + eta * (r.u - u0);
            const double gap = gu.dot(r.u - q.lmo(gu));
            CHECK(gap <= beta + 1e-12);
        }
    }
    CHECK(non_truncated > 500); // truncation should be rare at this cap
}

TEST_CASE("cg_procedure: argument guards") {
    FeasibleSet sx = FeasibleSet::simplex(3);
    Vec g0 = Vec::Ones(3), u0 = sx.lmo(g0);
    CHECK_THROWS_AS(cg_procedure(g0, u0, 0.0, 0.1, sx, 10), std::invalid_argument);
    CHECK_THROWS_AS(cg_procedure(g0, u0, 1.0, 0.0, sx, 10), std::invalid_argument);
    Vec bad = g0;
    bad[1] = std::nan("");
    CHECK_THROWS_AS(cg_procedure(bad, u0, 1.0, 0.1, sx, 10), std::domain_error);
}
