#pragma once

#include <cmath>
#include <cstdint>

namespace zopf {

// splitmix64 step (Steele, Lea, Flood 2014). Used both as a mixer and as the
// per-draw generator so that a draw is a pure function of (seed, stream, index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Self-contained generator for one logical draw. All randomness of the draw
/// (any number of scalars) unfolds from the key (seed, stream_id, draw index).
class DrawKit {
  public:
    DrawKit(std::uint64_t seed, std::uint64_t stream_id, std::uint64_t index) {
        state_ = seed;
        state_ = splitmix64(state_) ^ (0xA0761D6478BD642FULL * (stream_id + 1));
        state_ = splitmix64(state_) ^ (0xE7037ED1A0B428DBULL * (index + 1));
        (void)splitmix64(state_);
    }

    /// Seed a kit directly from a raw 64-bit value (e.g. a RandomSeedDraw).
    explicit DrawKit(std::uint64_t raw) : DrawKit(raw, 0x8EBC6AF09C88C6E3ULL, 0) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform on [0,1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0,1] (safe as a log argument).
    double uniform01_open_left() { return 1.0 - uniform01(); }

    /// Uniform on [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; pairs are cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01_open_left();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Seeded random stream with counter-based draw indexing: the i-th draw is a
/// pure function of (seed, stream_id, i), so pre-drawing a batch and fanning
/// evaluations out to workers cannot change the sequence.
class SeededStream {
  public:
    SeededStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {}

    /// Kit for the next draw index (advances the counter).
    DrawKit draw() { return DrawKit(seed_, stream_id_, next_index_++); }

    /// Kit for an explicit index; does not touch the counter.
    DrawKit at(std::uint64_t index) const { return DrawKit(seed_, stream_id_, index); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }
    std::uint64_t next_index() const { return next_index_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t next_index_ = 0;
};

/// One stream id per logical role, so runs stay reproducible when any one
/// consumer changes how much randomness it uses.
namespace stream_role {
constexpr std::uint64_t problem_gen = 0;
constexpr std::uint64_t directions = 1;
constexpr std::uint64_t stochastic = 2; // xi draws
constexpr std::uint64_t ball = 3;
constexpr std::uint64_t test_aux = 9;
} // namespace stream_role

} // namespace zopf
