#include "zopf/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace zopf {

Vec sphere_from_kit(DrawKit kit, int d) {
    if (d < 1)
        throw std::invalid_argument("sample_sphere: d must be >= 1");
    Vec e(d);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < d; ++i)
            e[i] = kit.gaussian();
        norm2 = e.squaredNorm();
    } while (norm2 == 0.0); // probability-zero degenerate draw
    e /= std::sqrt(norm2);
    return e;
}

Vec ball_from_kit(DrawKit kit, int d) {
    const double u = kit.uniform01_open_left();
    Vec x = sphere_from_kit(kit, d);
    x *= std::pow(u, 1.0 / static_cast<double>(d));
    return x;
}

Vec sample_sphere(SeededStream& stream, int d) {
    if (d < 1)
        throw std::invalid_argument("sample_sphere: d must be >= 1");
    return sphere_from_kit(stream.draw(), d);
}

Vec sample_ball(SeededStream& stream, int d) {
    if (d < 1)
        throw std::invalid_argument("sample_ball: d must be >= 1");
    return ball_from_kit(stream.draw(), d);
}

} // namespace zopf
