#include "zopf/rng.hpp"
#include "zopf/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace zopf;

TEST_CASE("streams: identical (seed, stream_id) reproduce identical sequences") {
    SeededStream a(12345, stream_role::directions);
    SeededStream b(12345, stream_role::directions);
    for (int i = 0; i < 1000; ++i)
        CHECK(a.draw().next_u64() == b.draw().next_u64());
}

TEST_CASE("streams: distinct stream_ids with equal seed diverge") {
    SeededStream a(77, stream_role::directions);
    SeededStream b(77, stream_role::stochastic);
    int equal = 0;
    for (int i = 0; i < 1000; ++i)
        if (a.draw().next_u64() == b.draw().next_u64())
            ++equal;
    CHECK(equal == 0);
}

TEST_CASE("streams: draw index fully determines the draw") {
    SeededStream seq(9, 4);
    const SeededStream frozen(9, 4);
    for (std::uint64_t i = 0; i < 32; ++i) {
        DrawKit sequential = seq.draw();
        DrawKit indexed = frozen.at(i);
        CHECK(sequential.next_u64() == indexed.next_u64());
    }
}

TEST_CASE("sample_sphere: unit norm and d=1 sign balance") {
    SeededStream s(5, stream_role::directions);
    for (int i = 0; i < 100; ++i) {
        Vec e = sample_sphere(s, 7);
        CHECK(std::abs(e.norm() - 1.0) <= 1e-12);
    }

    SeededStream s1(6, stream_role::directions);
    const int n = 10000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec e = sample_sphere(s1, 1);
        CHECK((e[0] == 1.0 || e[0] == -1.0));
        sum += e[0];
    }
    // 3-sigma binomial tolerance around the balanced mean
    CHECK(std::abs(sum / n) <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sample_sphere: coordinate means vanish at d=3") {
    SeededStream s(11, stream_role::directions);
    const int n = 100000;
    Vec mean = Vec::Zero(3);
    for (int i = 0; i < n; ++i)
        mean += sample_sphere(s, 3);
    mean /= static_cast<double>(n);
    const double tol = 3.0 * std::sqrt(1.0 / (3.0 * n)); // Var(e_i) = 1/d
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(mean[j]) <= tol);
}

TEST_CASE("sample_ball: containment, d=1 uniformity, d=2 area ratio") {
    SeededStream s(21, stream_role::ball);
    const int n1 = 10000;
    double sum = 0.0;
    for (int i = 0; i < n1; ++i) {
        Vec x = sample_ball(s, 1);
        CHECK(x.norm() <= 1.0 + 1e-15);
        sum += x[0];
    }
    CHECK(std::abs(sum / n1) <= 3.0 / std::sqrt(3.0 * n1));

    SeededStream s2(22, stream_role::ball);
    const int n2 = 100000;
    int inner = 0;
    for (int i = 0; i < n2; ++i) {
        Vec x = sample_ball(s2, 2);
        CHECK(x.norm() <= 1.0 + 1e-15);
        if (x.norm() <= 0.5)
            ++inner;
    }
    CHECK(static_cast<double>(inner) / n2 == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("samplers reject d = 0") {
    SeededStream s(1, 1);
    CHECK_THROWS_AS(sample_sphere(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_ball(s, 0), std::invalid_argument);
}
