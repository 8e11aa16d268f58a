#pragma once

#include "zopf/rng.hpp"
#include "zopf/vec.hpp"

#include <string>

namespace zopf {

/// Convex compact feasible set with an O(d) closed-form linear minimization
/// oracle, an exact l2-distance membership test, and closed-form p-norm
/// diameters. Immutable after construction; safe for concurrent use.
class FeasibleSet {
  public:
    enum class Kind { simplex, l1_ball, l2_ball, box };

    static FeasibleSet simplex(int d);
    static FeasibleSet l1_ball(int d, double radius);
    static FeasibleSet l2_ball(int d, double radius);
    static FeasibleSet box(int d, double lo, double hi);

    /// argmin_{v in Q} <g, v>. Ties are broken by lowest coordinate index.
    Vec lmo(const Vec& g) const;

    /// True iff the l2 distance from x to the set is <= tol.
    bool contains(const Vec& x, double tol) const;

    /// Exact l2 distance from x to the set (0 for members).
    double distance(const Vec& x) const;

    /// Closed-form diameter max_{x,y in Q} ||x-y||_p for p in {1,2}.
    double diameter(int p) const;

    /// Uniform-ish random member (vertices-free interior draw); test utility.
    Vec random_member(SeededStream& stream) const;

    int dimension() const { return dim_; }
    Kind kind() const { return kind_; }
    std::string kind_name() const;

  private:
    FeasibleSet(Kind kind, int d, double a, double b);

    Kind kind_;
    int dim_;
    double a_ = 0.0; // radius, or box lo
    double b_ = 0.0; // box hi
};

/// Euclidean projection onto the standard simplex {x >= 0, sum x = s}.
Vec project_simplex(const Vec& x, double total = 1.0);

} // namespace zopf
