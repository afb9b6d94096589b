#include "mycubic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mycubic {

namespace {

constexpr int kMaxBisections = 200;

// Bisect f(z) = target inside the bracket, f increasing when rising is
// true. Stops at width <= tol or when the midpoint stops moving.
double bisect_interval(Bracket b, double tol, bool rising) {
    for (int i = 0; i < kMaxBisections && b.hi - b.lo > tol; ++i) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;
        const bool below = f_canonical(mid) < b.target;
        if (below == rising)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return 0.5 * (b.lo + b.hi);
}

}  // namespace

double my_bisect(double x, double tol) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("my_bisect: requires finite x >= 0");
    if (!(tol >= 1e-15)) throw std::domain_error("my_bisect: requires tol >= 1e-15");
    if (x == 0.0) return 0.0;
    const double hi = std::max(1.0, std::cbrt(2.0 * x) + 1.0);  // f(hi) > x always
    return bisect_interval(Bracket{0.0, hi, x}, tol, true);
}

CanonicalRoots canonical_roots_bisect(double x, double tol) {
    if (!std::isfinite(x)) throw std::domain_error("canonical_roots_bisect: x must be finite");
    if (!(tol >= 1e-15))
        throw std::domain_error("canonical_roots_bisect: requires tol >= 1e-15");
    CanonicalRoots out;
    out.scenario = classify_target(x);
    // left interval ]-inf, -2/3], f rising to 2/27
    if (x <= kCanonicalMax) {
        const double lo = -(std::cbrt(2.0 * std::fabs(x)) + 2.0);  // f(lo) < x
        out.roots.push_back(bisect_interval(Bracket{lo, -2.0 / 3.0, x}, tol, true));
    }
    // middle interval [-2/3, 0], f falling from 2/27 to 0
    if (x >= 0.0 && x <= kCanonicalMax)
        out.roots.push_back(bisect_interval(Bracket{-2.0 / 3.0, 0.0, x}, tol, false));
    // right interval [0, inf), f rising from 0
    if (x >= 0.0) out.roots.push_back(my_bisect(x, tol));
    std::sort(out.roots.begin(), out.roots.end());
    out.multiplicity.assign(out.roots.size(), 1);
    return out;
}

}  // namespace mycubic
