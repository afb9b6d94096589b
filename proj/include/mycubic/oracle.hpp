#pragma once

#include "mycubic/closed_form.hpp"

namespace mycubic {

// Monotone bracket f(lo) <= target <= f(hi) (or reversed on decreasing
// intervals), lo < hi.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double target = 0.0;
};

/// Method-independent reference for MY(x): plain bisection of f on
/// [0, max(1, cbrt(2x) + 1)] down to bracket width tol (>= 1e-15).
/// Fixed 200-iteration cap; deterministic.
double my_bisect(double x, double tol);

/// Bisect each of the three monotonic intervals of f that brackets x;
/// all real roots of f(z) = x, ascending.
CanonicalRoots canonical_roots_bisect(double x, double tol);

}  // namespace mycubic
