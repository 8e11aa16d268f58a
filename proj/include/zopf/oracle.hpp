#pragma once

#include "zopf/errors.hpp"
#include "zopf/vec.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <utility>

namespace zopf {

/// Bounded deterministic perturbation delta(x) with |delta(x)| <= delta.
/// delta is a pure function of x: no hidden randomness.
struct NoiseModel {
    enum class Kind { none, constant, sign_of_first_coordinate, bounded_sine };

    Kind kind = Kind::none;
    double delta = 0.0; // bound on |delta(x)|
    double scale = 0.01; // wavelength of the bounded_sine oscillation

    double apply(const Vec& x) const;

    static NoiseModel none() { return {}; }
    static NoiseModel constant(double d) { return {Kind::constant, d, 0.01}; }
    static NoiseModel sign_first(double d) { return {Kind::sign_of_first_coordinate, d, 0.01}; }
    static NoiseModel sine(double d, double scale) { return {Kind::bounded_sine, d, scale}; }
};

struct OracleValue {
    double value = 0.0;         // f(x,xi) + delta(x)
    double noise_applied = 0.0; // the delta(x) part
};

/// A single value drawn from the experiment's stochasticity stream; the oracle
/// derives its xi realization from it deterministically.
using RandomSeedDraw = std::uint64_t;

/// Stochastic zero-order oracle: value queries only, with exact call
/// accounting. Thread-safe for concurrent evaluation; the counter is atomic.
class BlackBoxOracle {
  public:
    explicit BlackBoxOracle(int dimension, NoiseModel noise = {})
        : dim_(dimension), noise_(noise) {}
    virtual ~BlackBoxOracle() = default;

    BlackBoxOracle(const BlackBoxOracle&) = delete;
    BlackBoxOracle& operator=(const BlackBoxOracle&) = delete;

    /// Returns f(x,xi) + delta(x) and counts exactly one evaluation.
    OracleValue evaluate(const Vec& x, RandomSeedDraw xi) const {
        require_dim(x, dim_, "oracle");
        require_finite(x, "oracle");
        const double raw = raw_value(x, xi);
        const double noise = noise_.apply(x);
        evaluations_.fetch_add(1, std::memory_order_relaxed);
        return {raw + noise, noise};
    }

    long long evaluations() const { return evaluations_.load(std::memory_order_relaxed); }
    void reset_counter() const { evaluations_.store(0, std::memory_order_relaxed); }

    int dimension() const { return dim_; }
    const NoiseModel& noise_model() const { return noise_; }

  protected:
    /// f(x,xi) without noise or counting.
    virtual double raw_value(const Vec& x, RandomSeedDraw xi) const = 0;

  private:
    int dim_;
    NoiseModel noise_;
    mutable std::atomic<long long> evaluations_{0};
};

/// Wraps an arbitrary callable as a black box.
class FunctionOracle final : public BlackBoxOracle {
  public:
    using Fn = std::function<double(const Vec&, RandomSeedDraw)>;

    FunctionOracle(int dimension, Fn fn, NoiseModel noise = {})
        : BlackBoxOracle(dimension, noise), fn_(std::move(fn)) {}

    /// Deterministic objective; xi is ignored.
    FunctionOracle(int dimension, std::function<double(const Vec&)> fn, NoiseModel noise = {})
        : BlackBoxOracle(dimension, noise),
          fn_([f = std::move(fn)](const Vec& x, RandomSeedDraw) { return f(x); }) {}

  protected:
    double raw_value(const Vec& x, RandomSeedDraw xi) const override { return fn_(x, xi); }

  private:
    Fn fn_;
};

} // namespace zopf
