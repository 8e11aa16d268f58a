#include "zopf/problems.hpp"

#include "zopf/sampling.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

using namespace zopf;

TEST_CASE("quadratic: identity-matrix spot example") {
    QuadraticSimplexInstance inst;
    inst.d = 2;
    inst.A = Mat::Identity(2, 2);
    inst.x_star = Vec::Constant(2, 0.5);
    inst.b = inst.A * inst.x_star;
    inst.f_star = -0.5 * inst.x_star.dot(inst.A * inst.x_star);
    CHECK(inst.b[0] == doctest::Approx(0.5));
    CHECK(inst.f_star == doctest::Approx(-0.25));
    CHECK(inst.value(inst.x_star) == doctest::Approx(inst.f_star));
}

TEST_CASE("quadratic generator: minimizer, eigenvalues, symmetry") {
    QuadraticSimplexInstance inst = gen_quadratic_simplex(5, 1.0, 10.0, 123);
    CHECK((inst.A - inst.A.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(inst.value(inst.x_star) - inst.f_star) <= 1e-12);
    CHECK(inst.x_star.minCoeff() > 0.0);
    CHECK(inst.x_star.sum() == doctest::Approx(1.0).epsilon(1e-14));

    Eigen::SelfAdjointEigenSolver<Mat> eig(inst.A);
    for (int i = 0; i < 5; ++i) {
        CHECK(eig.eigenvalues()[i] >= 1.0 - 1e-10);
        CHECK(eig.eigenvalues()[i] <= 10.0 + 1e-10);
    }
    CHECK(inst.lambda_max_drawn == doctest::Approx(eig.eigenvalues().maxCoeff()).epsilon(1e-12));

    // f >= f_star across the simplex (the unconstrained minimizer is inside Q)
    FeasibleSet sx = FeasibleSet::simplex(5);
    SeededStream s(1, stream_role::test_aux);
    for (int i = 0; i < 1000; ++i)
        CHECK(inst.value(sx.random_member(s)) >= inst.f_star - 1e-12);

    CHECK_THROWS_AS(gen_quadratic_simplex(1, 1.0, 2.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_quadratic_simplex(4, 0.0, 2.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_quadratic_simplex(4, 3.0, 2.0, 0), std::invalid_argument);
}

TEST_CASE("quadratic generator: seeded regeneration is bit-identical") {
    QuadraticSimplexInstance a = gen_quadratic_simplex(6, 0.5, 4.0, 99);
    QuadraticSimplexInstance b = gen_quadratic_simplex(6, 0.5, 4.0, 99);
    CHECK((a.A - b.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.b - b.b).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.x_star - b.x_star).cwiseAbs().maxCoeff() == 0.0);

    QuadraticSimplexInstance c = gen_quadratic_simplex(6, 0.5, 4.0, 100);
    CHECK((a.A - c.A).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("quadratic: serialization record regenerates the instance") {
    QuadraticSimplexInstance a = gen_quadratic_simplex(5, 2.0, 7.0, 31);
    std::stringstream record;
    a.serialize(record);
    QuadraticSimplexInstance b = load_quadratic_simplex(record);
    CHECK((a.A - b.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.x_star - b.x_star).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.f_star == b.f_star);
}

TEST_CASE("quadratic constants bound the gradient on Q_gamma") {
    QuadraticSimplexInstance inst = gen_quadratic_simplex(8, 1.0, 10.0, 17);
    const double gamma = 0.05;
    const InstanceConstants c = inst.constants(gamma);
    FeasibleSet sx = FeasibleSet::simplex(8);
    SeededStream s(2, stream_role::test_aux);
    for (int i = 0; i < 10000; ++i) {
        Vec x = sx.random_member(s) + gamma * sample_ball(s, 8);
        const Vec g = inst.gradient(x);
        CHECK(g.norm() <= c.M2 + 1e-12);
        CHECK(g.lpNorm<Eigen::Infinity>() <= c.M1 + 1e-12);
    }
    CHECK(c.L2 == doctest::Approx(inst.lambda_max_drawn));
    CHECK(c.L1 == doctest::Approx(inst.A.cwiseAbs().maxCoeff()));
}

TEST_CASE("quadratic satisfies the p-norm Lipschitz bound on sampled pairs") {
    QuadraticSimplexInstance inst = gen_quadratic_simplex(6, 1.0, 8.0, 4);
    const double gamma = 0.05;
    const InstanceConstants c = inst.constants(gamma);
    FeasibleSet sx = FeasibleSet::simplex(6);
    SeededStream s(3, stream_role::test_aux);
    for (int i = 0; i < 10000; ++i) {
        Vec x = sx.random_member(s) + gamma * sample_ball(s, 6);
        Vec y = sx.random_member(s) + gamma * sample_ball(s, 6);
        const double diff = std::abs(inst.value(y) - inst.value(x));
        CHECK(diff <= c.M2 * (y - x).norm() + 1e-12);
        CHECK(diff <= c.M1 * (y - x).cwiseAbs().sum() + 1e-12);
    }
}

TEST_CASE("l1_distance instance: anchor and vertex values") {
    NonsmoothInstance inst = gen_nonsmooth(NonsmoothInstance::Kind::l1_distance, 3, 5);
    CHECK(inst.value(inst.x_star) == doctest::Approx(0.0));
    CHECK(inst.f_star == 0.0);

    NonsmoothInstance manual = inst;
    manual.x_star = Vec::Zero(3);
    manual.x_star[0] = 1.0;
    Vec other = Vec::Zero(3);
    other[1] = 1.0;
    CHECK(manual.value(other) == doctest::Approx(2.0));
}

TEST_CASE("max_affine: degenerate single piece reduces to a linear program") {
    NonsmoothInstance inst = gen_nonsmooth(NonsmoothInstance::Kind::max_affine, 5, 8, 1);
    FeasibleSet sx = FeasibleSet::simplex(5);
    const Vec a1 = inst.pieces_a.col(0);
    CHECK((inst.x_star - sx.lmo(a1)).norm() == 0.0);
    CHECK(inst.f_star == doctest::Approx(a1.minCoeff()));
    CHECK(inst.value(inst.x_star) == doctest::Approx(inst.f_star));
}

TEST_CASE("max_affine: x_star is a global minimizer over the simplex") {
    NonsmoothInstance inst = gen_nonsmooth(NonsmoothInstance::Kind::max_affine, 5, 21, 6);
    CHECK(std::abs(inst.value(inst.x_star) - inst.f_star) <= 1e-12);
    FeasibleSet sx = FeasibleSet::simplex(5);
    SeededStream s(6, stream_role::test_aux);
    for (int i = 0; i < 1000; ++i)
        CHECK(inst.value(sx.random_member(s)) >= inst.f_star - 1e-12);
}

TEST_CASE("stochastic variant: zero-mean perturbation within the declared Lipschitz budget") {
    NonsmoothInstance inst =
        gen_nonsmooth(NonsmoothInstance::Kind::l1_distance, 4, 9, 5, 0.25);
    const InstanceConstants c = inst.constants(0.0);
    FeasibleSet sx = FeasibleSet::simplex(4);
    SeededStream pts(7, stream_role::test_aux), xis(8, stream_role::stochastic);

    double mean = 0.0;
    const int n = 20000;
    Vec x = sx.random_member(pts);
    const double fx = inst.value(x);
    for (int i = 0; i < n; ++i) {
        const RandomSeedDraw xi = xis.draw().next_u64();
        mean += inst.value(x, xi);
        Vec y = sx.random_member(pts);
        const double diff = std::abs(inst.value(y, xi) - inst.value(x, xi));
        CHECK(diff <= c.M1 * (y - x).cwiseAbs().sum() + 1e-12);
        CHECK(diff <= c.M2 * (y - x).norm() + 1e-12);
    }
    mean /= n;
    // <xi, x> has mean zero; x has unit l1 mass so each term is within 0.25
    CHECK(std::abs(mean - fx) <= 3.0 * 0.25 / std::sqrt(static_cast<double>(n)));

    CHECK_THROWS_AS(gen_nonsmooth(NonsmoothInstance::Kind::max_affine, 4, 1, 0),
                    std::invalid_argument);
}
