#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace zopf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline bool all_finite(const Vec& x) {
    return x.allFinite();
}

inline void require_finite(const Vec& x, const char* who) {
    if (!x.allFinite())
        throw std::domain_error(std::string(who) + ": non-finite coordinate");
}

inline void require_dim(const Vec& x, Eigen::Index d, const char* who) {
    if (x.size() != d)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch, got " +
                                    std::to_string(x.size()) + " expected " + std::to_string(d));
}

} // namespace zopf
