#pragma once

#include "zopf/feasible_set.hpp"
#include "zopf/oracle.hpp"
#include "zopf/rng.hpp"
#include "zopf/vec.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace zopf {

/// Lipschitz-type constants of an instance, valid on the feasible set
/// enlarged by an l2-ball of radius gamma_slack.
struct InstanceConstants {
    double M1 = 0.0;  // |f(y)-f(x)| <= M1 ||y-x||_1
    double M2 = 0.0;  // |f(y)-f(x)| <= M2 ||y-x||_2
    double L1 = 0.0;  // ||grad f(y)-grad f(x)||_inf <= L1 ||y-x||_1 (smooth instances)
    double L2 = 0.0;  // ||grad f(y)-grad f(x)||_2   <= L2 ||y-x||_2

    double M(int p) const { return p == 1 ? M1 : M2; }
    double L(int p) const { return p == 1 ? L1 : L2; }
};

/// f(x) = 1/2 <x, Ax> - <b, x> on the simplex, with A = Q^T diag(lambda) Q
/// for a seeded random orthogonal Q and b = A x_star so the minimizer and
/// optimal value are known analytically.
struct QuadraticSimplexInstance {
    int d = 0;
    std::uint64_t seed = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;

    Mat A;
    Vec b;
    Vec x_star;
    double f_star = 0.0;
    double lambda_max_drawn = 0.0; // largest eigenvalue actually drawn

    double value(const Vec& x) const;
    Vec gradient(const Vec& x) const;

    /// Over-estimated constants on Q_gamma (vertex maximization + gamma slack).
    InstanceConstants constants(double gamma_slack) const;

    std::unique_ptr<BlackBoxOracle> make_oracle(NoiseModel noise = {}) const;

    /// Self-describing plain-text record sufficient to regenerate bit-identically.
    void serialize(std::ostream& out) const;
};

QuadraticSimplexInstance gen_quadratic_simplex(int d, double lambda_min, double lambda_max,
                                               std::uint64_t seed);

QuadraticSimplexInstance load_quadratic_simplex(std::istream& in);

/// Non-smooth convex instances with a known minimizer on the simplex.
///   l1_distance: f(x) = ||x - x_star||_1
///   max_affine:  f(x) = max_j (<a_j, x> + c_j), pieces calibrated so x_star
///                is a known global minimizer (0 in the convex hull of {a_j})
/// An optional stochastic term <xi, x> with xi zero-mean bounded preserves
/// the expectation and the minimizer.
struct NonsmoothInstance {
    enum class Kind { l1_distance, max_affine };

    Kind kind = Kind::l1_distance;
    int d = 0;
    std::uint64_t seed = 0;

    Vec x_star;
    double f_star = 0.0;

    Mat pieces_a; // max_affine: one column per piece
    Vec pieces_c;

    double noise_half_width = 0.0; // xi_i ~ U[-w, w] per coordinate; 0 = deterministic

    double value(const Vec& x) const;            // E_xi f(x, xi) = f(x)
    double value(const Vec& x, RandomSeedDraw xi) const;

    InstanceConstants constants(double gamma_slack) const;

    std::unique_ptr<BlackBoxOracle> make_oracle(NoiseModel noise = {}) const;
};

NonsmoothInstance gen_nonsmooth(NonsmoothInstance::Kind kind, int d, std::uint64_t seed,
                                int max_affine_pieces = 5, double noise_half_width = 0.0);

} // namespace zopf
