#include "zopf/oracle.hpp"

#include <cmath>

namespace zopf {

double NoiseModel::apply(const Vec& x) const {
    switch (kind) {
        case Kind::none:
            return 0.0;
        case Kind::constant:
            return delta;
        case Kind::sign_of_first_coordinate:
            return x[0] > 0.0 ? delta : (x[0] < 0.0 ? -delta : 0.0);
        case Kind::bounded_sine:
            return delta * std::sin(x.sum() / scale);
    }
    return 0.0;
}

} // namespace zopf
