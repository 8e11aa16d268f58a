#pragma once

#include "zopf/rng.hpp"
#include "zopf/vec.hpp"

namespace zopf {

/// Uniform sample on the unit l2-sphere in R^d: normalized Gaussian vector.
Vec sample_sphere(SeededStream& stream, int d);

/// Uniform sample in the closed unit l2-ball in R^d: sphere sample scaled by U^{1/d}.
Vec sample_ball(SeededStream& stream, int d);

// Variants that consume an explicit kit (used when a batch pre-draws indices).
Vec sphere_from_kit(DrawKit kit, int d);
Vec ball_from_kit(DrawKit kit, int d);

} // namespace zopf
