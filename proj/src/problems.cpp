#include "zopf/problems.hpp"

#include "zopf/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zopf {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class QuadraticOracle final : public BlackBoxOracle {
  public:
    QuadraticOracle(Mat A, Vec b, NoiseModel noise)
        : BlackBoxOracle(static_cast<int>(b.size()), noise), A_(std::move(A)), b_(std::move(b)) {}

  protected:
    double raw_value(const Vec& x, RandomSeedDraw) const override {
        return 0.5 * x.dot(A_ * x) - b_.dot(x);
    }

  private:
    Mat A_;
    Vec b_;
};

class NonsmoothOracle final : public BlackBoxOracle {
  public:
    NonsmoothOracle(NonsmoothInstance inst, NoiseModel noise)
        : BlackBoxOracle(inst.d, noise), inst_(std::move(inst)) {}

  protected:
    double raw_value(const Vec& x, RandomSeedDraw xi) const override {
        return inst_.value(x, xi);
    }

  private:
    NonsmoothInstance inst_;
};

Vec dirichlet_interior(DrawKit& kit, int d) {
    Vec x(d);
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        x[i] = -std::log(kit.uniform01_open_left());
        s += x[i];
    }
    return Vec(x / s);
}

} // namespace

double QuadraticSimplexInstance::value(const Vec& x) const {
    return 0.5 * x.dot(A * x) - b.dot(x);
}

Vec QuadraticSimplexInstance::gradient(const Vec& x) const { return A * x - b; }

InstanceConstants QuadraticSimplexInstance::constants(double gamma_slack) const {
    InstanceConstants c;
    double m2 = 0.0, m1 = 0.0;
    for (int i = 0; i < d; ++i) {
        const Vec gi = A.col(i) - b; // gradient at vertex e_i (A symmetric)
        m2 = std::max(m2, gi.norm());
        m1 = std::max(m1, gi.lpNorm<Eigen::Infinity>());
    }
    const double max_row = A.rowwise().norm().maxCoeff();
    c.M2 = m2 + gamma_slack * lambda_max_drawn;
    c.M1 = m1 + gamma_slack * max_row;
    c.L2 = lambda_max_drawn;
    c.L1 = A.cwiseAbs().maxCoeff();
    return c;
}

std::unique_ptr<BlackBoxOracle> QuadraticSimplexInstance::make_oracle(NoiseModel noise) const {
    return std::make_unique<QuadraticOracle>(A, b, noise);
}

QuadraticSimplexInstance gen_quadratic_simplex(int d, double lambda_min, double lambda_max,
                                               std::uint64_t seed) {
    if (d < 2)
        throw std::invalid_argument("gen_quadratic_simplex: d must be >= 2");
    if (!(lambda_min > 0.0) || !(lambda_min <= lambda_max))
        throw std::invalid_argument("gen_quadratic_simplex: need 0 < lambda_min <= lambda_max");

    SeededStream stream(seed, stream_role::problem_gen);

    QuadraticSimplexInstance inst;
    inst.d = d;
    inst.seed = seed;
    inst.lambda_min = lambda_min;
    inst.lambda_max = lambda_max;

    DrawKit gk = stream.draw();
    Mat G(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            G(i, j) = gk.gaussian();
    const Mat Q = Eigen::HouseholderQR<Mat>(G).householderQ();

    DrawKit lk = stream.draw();
    Vec lambda(d);
    for (int i = 0; i < d; ++i)
        lambda[i] = lk.uniform(lambda_min, lambda_max);
    inst.lambda_max_drawn = lambda.maxCoeff();

    inst.A = Q.transpose() * lambda.asDiagonal() * Q;
    inst.A = 0.5 * (inst.A + inst.A.transpose()).eval(); // exact symmetry

    DrawKit xk = stream.draw();
    inst.x_star = dirichlet_interior(xk, d);
    inst.b = inst.A * inst.x_star;
    inst.f_star = -0.5 * inst.x_star.dot(inst.A * inst.x_star);
    return inst;
}

void QuadraticSimplexInstance::serialize(std::ostream& out) const {
    out << "kind = quadratic_simplex\n";
    out << "d = " << d << "\n";
    out << "seed = " << seed << "\n";
    out << "lambda_min = " << fmt17(lambda_min) << "\n";
    out << "lambda_max = " << fmt17(lambda_max) << "\n";
    out << "x_star =";
    for (int i = 0; i < d; ++i)
        out << " " << fmt17(x_star[i]);
    out << "\n";
}

QuadraticSimplexInstance load_quadratic_simplex(std::istream& in) {
    int d = 0;
    std::uint64_t seed = 0;
    double lmin = 0.0, lmax = 0.0;
    bool have_kind = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key, eq;
        if (!(ls >> key))
            continue;
        if (key == "kind") {
            std::string v;
            ls >> eq >> v;
            if (v != "quadratic_simplex")
                throw ConfigError("load_quadratic_simplex: unexpected kind '" + v + "'");
            have_kind = true;
        } else if (key == "d")
            ls >> eq >> d;
        else if (key == "seed")
            ls >> eq >> seed;
        else if (key == "lambda_min")
            ls >> eq >> lmin;
        else if (key == "lambda_max")
            ls >> eq >> lmax;
        // x_star is descriptive; the instance is regenerated from the seed.
    }
    if (!have_kind || d < 2)
        throw ConfigError("load_quadratic_simplex: incomplete record");
    return gen_quadratic_simplex(d, lmin, lmax, seed);
}

double NonsmoothInstance::value(const Vec& x) const {
    switch (kind) {
        case Kind::l1_distance:
            return (x - x_star).cwiseAbs().sum();
        case Kind::max_affine:
            return (pieces_a.transpose() * x + pieces_c).maxCoeff();
    }
    return 0.0;
}

double NonsmoothInstance::value(const Vec& x, RandomSeedDraw xi) const {
    double v = value(x);
    if (noise_half_width > 0.0) {
        DrawKit kit(xi);
        for (int i = 0; i < d; ++i)
            v += kit.uniform(-noise_half_width, noise_half_width) * x[i];
    }
    return v;
}

InstanceConstants NonsmoothInstance::constants(double /*gamma_slack*/) const {
    // Both kinds are globally Lipschitz, so the Q_gamma enlargement is free.
    InstanceConstants c;
    const double w = noise_half_width;
    const double sd = std::sqrt(static_cast<double>(d));
    switch (kind) {
        case Kind::l1_distance:
            c.M1 = 1.0 + w;
            c.M2 = sd * (1.0 + w);
            break;
        case Kind::max_affine: {
            double a2 = 0.0, ainf = 0.0;
            for (int j = 0; j < pieces_a.cols(); ++j) {
                a2 = std::max(a2, pieces_a.col(j).norm());
                ainf = std::max(ainf, pieces_a.col(j).lpNorm<Eigen::Infinity>());
            }
            c.M1 = ainf + w;
            c.M2 = a2 + w * sd;
            break;
        }
    }
    return c;
}

std::unique_ptr<BlackBoxOracle> NonsmoothInstance::make_oracle(NoiseModel noise) const {
    return std::make_unique<NonsmoothOracle>(*this, noise);
}

NonsmoothInstance gen_nonsmooth(NonsmoothInstance::Kind kind, int d, std::uint64_t seed,
                                int max_affine_pieces, double noise_half_width) {
    if (d < 1)
        throw std::invalid_argument("gen_nonsmooth: d must be >= 1");
    if (noise_half_width < 0.0)
        throw std::invalid_argument("gen_nonsmooth: noise_half_width must be >= 0");

    SeededStream stream(seed, stream_role::problem_gen);
    NonsmoothInstance inst;
    inst.kind = kind;
    inst.d = d;
    inst.seed = seed;
    inst.noise_half_width = noise_half_width;

    switch (kind) {
        case NonsmoothInstance::Kind::l1_distance: {
            DrawKit kit = stream.draw();
            inst.x_star = dirichlet_interior(kit, d);
            inst.f_star = 0.0;
            break;
        }
        case NonsmoothInstance::Kind::max_affine: {
            const int J = max_affine_pieces;
            if (J < 1)
                throw std::invalid_argument("gen_nonsmooth: need at least one affine piece");
            DrawKit kit = stream.draw();
            inst.pieces_a = Mat(d, J);
            for (int j = 0; j + 1 < J; ++j)
                for (int i = 0; i < d; ++i)
                    inst.pieces_a(i, j) = kit.gaussian();
            if (J == 1) {
                for (int i = 0; i < d; ++i)
                    inst.pieces_a(i, 0) = kit.gaussian();
                inst.pieces_c = Vec::Zero(1);
                // Linear objective: the minimizer is the LMO vertex.
                int best = 0;
                for (int i = 1; i < d; ++i)
                    if (inst.pieces_a(i, 0) < inst.pieces_a(best, 0))
                        best = i;
                inst.x_star = Vec::Zero(d);
                inst.x_star[best] = 1.0;
                inst.f_star = inst.pieces_a(best, 0);
            } else {
                // Last piece balances the rest so 0 lies in conv{a_j}, making
                // the common-value point a global minimizer.
                inst.pieces_a.col(J - 1) =
                    -inst.pieces_a.leftCols(J - 1).rowwise().mean();
                DrawKit xk = stream.draw();
                inst.x_star = dirichlet_interior(xk, d);
                inst.pieces_c = Vec(J);
                for (int j = 0; j < J; ++j)
                    inst.pieces_c[j] = -inst.pieces_a.col(j).dot(inst.x_star);
                inst.f_star = 0.0;
            }
            break;
        }
    }
    return inst;
}

} // namespace zopf
