#include "zopf/oracle.hpp"
#include "zopf/rng.hpp"
#include "zopf/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

using namespace zopf;

namespace {

FunctionOracle identity_quadratic(int d, NoiseModel noise = {}) {
    return FunctionOracle(
        d, [](const Vec& x) { return 0.5 * x.squaredNorm(); }, noise);
}

} // namespace

TEST_CASE("evaluate: quadratic and absolute-value spot values") {
    Vec x(2);
    x << 1.0, 0.0;

    FunctionOracle clean = identity_quadratic(2);
    CHECK(clean.evaluate(x, 0).value == doctest::Approx(0.5).epsilon(1e-15));

    FunctionOracle noisy = identity_quadratic(2, NoiseModel::constant(0.01));
    OracleValue v = noisy.evaluate(x, 0);
    CHECK(v.value == doctest::Approx(0.51).epsilon(1e-15));
    CHECK(v.noise_applied == doctest::Approx(0.01));

    FunctionOracle abs1(1, [](const Vec& y) { return std::abs(y[0]); });
    Vec p(1);
    p << 0.3;
    CHECK(abs1.evaluate(p, 0).value == doctest::Approx(0.3));
}

TEST_CASE("evaluate: input validation") {
    FunctionOracle o = identity_quadratic(2);
    Vec bad(2);
    bad << 1.0, std::nan("");
    CHECK_THROWS_AS(o.evaluate(bad, 0), std::domain_error);
    Vec wrong(3);
    wrong.setZero();
    CHECK_THROWS_AS(o.evaluate(wrong, 0), std::invalid_argument);
}

TEST_CASE("counter: reset semantics") {
    FunctionOracle o = identity_quadratic(2);
    Vec x = Vec::Zero(2);
    for (int i = 0; i < 57; ++i)
        o.evaluate(x, 0);
    CHECK(o.evaluations() == 57);
    o.reset_counter();
    CHECK(o.evaluations() == 0);
    o.reset_counter();
    CHECK(o.evaluations() == 0);
    o.evaluate(x, 0);
    o.reset_counter();
    o.evaluate(x, 0);
    CHECK(o.evaluations() == 1);
}

TEST_CASE("counter: exact under concurrent evaluation") {
    FunctionOracle o = identity_quadratic(4);
    const int threads = 8, per_thread = 2000;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&o] {
            Vec x = Vec::Constant(4, 0.25);
            for (int i = 0; i < per_thread; ++i)
                o.evaluate(x, static_cast<RandomSeedDraw>(i));
        });
    for (auto& th : pool)
        th.join();
    CHECK(o.evaluations() == static_cast<long long>(threads) * per_thread);
}

TEST_CASE("noise models: |delta(x)| <= Delta on 10^4 random points, deterministic in x") {
    const int d = 6;
    const double Delta = 0.037;
    const NoiseModel models[] = {NoiseModel::none(), NoiseModel::constant(Delta),
                                 NoiseModel::sign_first(Delta), NoiseModel::sine(Delta, 0.02)};
    SeededStream s(99, stream_role::test_aux);
    for (int i = 0; i < 10000; ++i) {
        Vec x = 3.0 * sample_ball(s, d);
        for (const NoiseModel& m : models) {
            const double n1 = m.apply(x);
            const double n2 = m.apply(x);
            CHECK(n1 == n2);
            CHECK(std::abs(n1) <= (m.kind == NoiseModel::Kind::none ? 0.0 : Delta) + 1e-15);
        }
    }
}

TEST_CASE("determinism: equal seeds give bit-identical value sequences") {
    auto run = [] {
        FunctionOracle o(3, [](const Vec& x, RandomSeedDraw xi) {
            DrawKit kit(xi);
            return x.sum() + 0.01 * kit.uniform(-1.0, 1.0);
        });
        SeededStream pts(4, stream_role::test_aux), xis(4, stream_role::stochastic);
        std::vector<double> out;
        for (int i = 0; i < 200; ++i)
            out.push_back(o.evaluate(sample_ball(pts, 3), xis.draw().next_u64()).value);
        return out;
    };
    CHECK(run() == run());
}
