#include "zopf/feasible_set.hpp"

#include "zopf/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zopf {

FeasibleSet::FeasibleSet(Kind kind, int d, double a, double b)
    : kind_(kind), dim_(d), a_(a), b_(b) {
    if (d < 1)
        throw std::invalid_argument("FeasibleSet: dimension must be >= 1");
}

FeasibleSet FeasibleSet::simplex(int d) { return {Kind::simplex, d, 0.0, 0.0}; }

FeasibleSet FeasibleSet::l1_ball(int d, double radius) {
    if (radius <= 0.0)
        throw std::invalid_argument("l1_ball: radius must be positive");
    return {Kind::l1_ball, d, radius, 0.0};
}

FeasibleSet FeasibleSet::l2_ball(int d, double radius) {
    if (radius <= 0.0)
        throw std::invalid_argument("l2_ball: radius must be positive");
    return {Kind::l2_ball, d, radius, 0.0};
}

FeasibleSet FeasibleSet::box(int d, double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("box: need lo < hi");
    return {Kind::box, d, lo, hi};
}

std::string FeasibleSet::kind_name() const {
    switch (kind_) {
        case Kind::simplex: return "simplex";
        case Kind::l1_ball: return "l1_ball";
        case Kind::l2_ball: return "l2_ball";
        case Kind::box: return "box";
    }
    return "?";
}

Vec FeasibleSet::lmo(const Vec& g) const {
    require_dim(g, dim_, "lmo");
    require_finite(g, "lmo");
    Vec v = Vec::Zero(dim_);
    switch (kind_) {
        case Kind::simplex: {
            int best = 0;
            for (int i = 1; i < dim_; ++i)
                if (g[i] < g[best])
                    best = i;
            v[best] = 1.0;
            return v;
        }
        case Kind::l1_ball: {
            int best = 0;
            for (int i = 1; i < dim_; ++i)
                if (std::abs(g[i]) > std::abs(g[best]))
                    best = i;
            v[best] = g[best] > 0.0 ? -a_ : a_;
            if (g[best] == 0.0)
                v[best] = -a_;
            return v;
        }
        case Kind::l2_ball: {
            const double n = g.norm();
            if (n == 0.0) {
                v[0] = -a_;
                return v;
            }
            return Vec(-(a_ / n) * g);
        }
        case Kind::box: {
            for (int i = 0; i < dim_; ++i)
                v[i] = g[i] < 0.0 ? b_ : a_; // g == 0 picks lo
            return v;
        }
    }
    throw std::logic_error("lmo: unreachable");
}

Vec project_simplex(const Vec& x, double total) {
    const int d = static_cast<int>(x.size());
    std::vector<double> u(x.data(), x.data() + d);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumsum = 0.0;
    double tau = 0.0;
    int support = 0;
    for (int i = 0; i < d; ++i) {
        cumsum += u[i];
        const double t = (cumsum - total) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) {
            tau = t;
            support = i + 1;
        }
    }
    (void)support;
    Vec z(d);
    for (int i = 0; i < d; ++i)
        z[i] = std::max(x[i] - tau, 0.0);
    return z;
}

double FeasibleSet::distance(const Vec& x) const {
    require_dim(x, dim_, "distance");
    require_finite(x, "distance");
    switch (kind_) {
        case Kind::simplex:
            return (x - project_simplex(x)).norm();
        case Kind::l1_ball: {
            if (x.cwiseAbs().sum() <= a_)
                return 0.0;
            // Project |x| onto the simplex of mass r, restore signs.
            Vec z = project_simplex(x.cwiseAbs(), a_);
            for (int i = 0; i < dim_; ++i)
                if (x[i] < 0.0)
                    z[i] = -z[i];
            return (x - z).norm();
        }
        case Kind::l2_ball:
            return std::max(0.0, x.norm() - a_);
        case Kind::box: {
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                const double c = std::clamp(x[i], a_, b_);
                s += (x[i] - c) * (x[i] - c);
            }
            return std::sqrt(s);
        }
    }
    throw std::logic_error("distance: unreachable");
}

bool FeasibleSet::contains(const Vec& x, double tol) const {
    if (tol < 0.0)
        throw std::invalid_argument("contains: tol must be >= 0");
    return distance(x) <= tol;
}

double FeasibleSet::diameter(int p) const {
    if (p != 1 && p != 2)
        throw std::invalid_argument("diameter: p must be 1 or 2");
    const double sd = std::sqrt(static_cast<double>(dim_));
    switch (kind_) {
        case Kind::simplex:
            if (dim_ == 1)
                return 0.0; // single point {1}
            return p == 2 ? std::sqrt(2.0) : 2.0;
        case Kind::l1_ball:
            return 2.0 * a_; // attained at antipodal vertices for both norms
        case Kind::l2_ball:
            return p == 2 ? 2.0 * a_ : 2.0 * a_ * sd;
        case Kind::box:
            return p == 2 ? (b_ - a_) * sd : (b_ - a_) * static_cast<double>(dim_);
    }
    throw std::logic_error("diameter: unreachable");
}

Vec FeasibleSet::random_member(SeededStream& stream) const {
    DrawKit kit = stream.draw();
    switch (kind_) {
        case Kind::simplex: {
            // Dirichlet(1,...,1) via normalized exponentials.
            Vec x(dim_);
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                x[i] = -std::log(kit.uniform01_open_left());
                s += x[i];
            }
            return Vec(x / s);
        }
        case Kind::l1_ball: {
            // Ball sample mapped through the l1 unit ball: sign-split a simplex draw.
            Vec x(dim_);
            double s = 0.0;
            for (int i = 0; i < dim_; ++i) {
                x[i] = -std::log(kit.uniform01_open_left());
                s += x[i];
            }
            x *= a_ * std::pow(kit.uniform01(), 1.0 / dim_) / s;
            for (int i = 0; i < dim_; ++i)
                if (kit.next_u64() & 1u)
                    x[i] = -x[i];
            return x;
        }
        case Kind::l2_ball:
            return Vec(a_ * ball_from_kit(kit, dim_));
        case Kind::box: {
            Vec x(dim_);
            for (int i = 0; i < dim_; ++i)
                x[i] = kit.uniform(a_, b_);
            return x;
        }
    }
    throw std::logic_error("random_member: unreachable");
}

} // namespace zopf
