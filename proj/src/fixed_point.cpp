#include "mycubic/fixed_point.hpp"

#include <cmath>
#include <stdexcept>

// The approximation path below (fixed_point_map, my_seed, my_iterated,
// my_fixed) is built from +, -, *, /, sqrt, cbrt and rational powers only;
// tests/test_fixed_point.cpp scans this file for transcendental calls.

namespace mycubic {

namespace {

void require_nonneg(double v, const char* who) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string(who) + ": requires a finite nonnegative argument");
}

double two_fifths_power(double x) {
    const double r5 = std::pow(x, 0.2);  // real fifth root
    return r5 * r5;
}

}  // namespace

double fixed_point_map(double x, double y) {
    require_nonneg(x, "fixed_point_map");
    require_nonneg(y, "fixed_point_map");
    if (x == 0.0) return 0.0;  // cbrt(1/27) - 1/3 exactly
    return std::cbrt(2.0 * x + 1.0 / 27.0 + std::sqrt(2.0 * x / (1.0 + y)) / 3.0) - 1.0 / 3.0;
}

double fixed_point_map_dy(double x, double y) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("fixed_point_map_dy: requires x > 0");
    require_nonneg(y, "fixed_point_map_dy");
    const double s2x = std::sqrt(2.0 * x);
    const double inner = (2.0 * x + 1.0 / 27.0) * std::pow(1.0 + y, 2.25) +
                         (s2x / 3.0) * std::pow(1.0 + y, 1.75);
    return -(s2x / 18.0) * std::pow(inner, -2.0 / 3.0);
}

double my_seed(double x) {
    require_nonneg(x, "my_seed");
    return fixed_point_map(x, two_fifths_power(x));
}

double my_iterated(double x, int n) {
    if (n < 0) throw std::invalid_argument("my_iterated: requires n >= 0");
    double y = my_seed(x);
    for (int i = 0; i < n; ++i) y = fixed_point_map(x, y);
    return y;
}

IterationTrace iterate(double x, int n) {
    require_nonneg(x, "iterate");
    if (n < 0 || n > 64) throw std::invalid_argument("iterate: requires 0 <= n <= 64");
    IterationTrace trace;
    trace.x = x;
    trace.reference = my(x);
    trace.rows.reserve(static_cast<std::size_t>(n) + 1);
    double y = my_seed(x);
    for (int i = 0; i <= n; ++i) {
        IterationRow row;
        row.n = i;
        row.value = y;
        row.abs_err = std::fabs(y - trace.reference);
        row.rel_err = trace.reference == 0.0 ? 0.0 : std::fabs(y / trace.reference - 1.0);
        trace.rows.push_back(row);
        y = fixed_point_map(x, y);
    }
    return trace;
}

EvalResult my_fixed(double x, double tol) {
    require_nonneg(x, "my_fixed");
    if (!(tol >= 1e-15))
        throw std::domain_error("my_fixed: tol below 1e-15 is not certifiable in binary64");
    EvalResult r;
    r.x = x;
    r.method = Method::FixedPoint;
    if (x == 0.0) {
        r.value = 0.0;
        r.iterations = 0;
        r.error_bound = 0.0;
        return r;
    }
    double bound = kSeedErrorBound;
    int n = 0;
    double y = my_seed(x);
    while (bound > tol) {
        y = fixed_point_map(x, y);
        bound /= kShrinkFactor;
        ++n;
    }
    r.value = y;
    r.iterations = n;
    r.error_bound = bound;
    return r;
}

ConvergenceConstants convergence_constants() {
    ConvergenceConstants k;
    // C1 = max over y >= 0, x > 0 of |d/dy map|, attained at y = 0. In
    // v = (2x)^(-1/4) the bound is (1/18)(1/v + v^3/27 + v/3)^(-2/3),
    // stationary where v^4 + 3v^2 - 9 = 0.
    k.v0 = std::sqrt(3.0 * (std::sqrt(5.0) - 1.0) / 2.0);
    k.C1 = (1.0 / 18.0) *
           std::pow(1.0 / k.v0 + k.v0 * k.v0 * k.v0 / 27.0 + k.v0 / 3.0, -2.0 / 3.0);
    // C2 = max along the fixed-point curve of z/(18(1+z)(z+1/3)^2),
    // attained at the positive root of 6z^2 + 3z - 1 = 0.
    k.z_star = (-3.0 + std::sqrt(33.0)) / 12.0;
    k.C2 = 1.0 / (18.0 * (k.z_star * k.z_star + 5.0 * k.z_star / 3.0 + 7.0 / 9.0 +
                          1.0 / (9.0 * k.z_star)));
    // Seed bounds factor as A*B with A <= 1/16 (at z = 1) and
    // B <= (1/4)(xi^(-2/9) + xi^(7/9))^(-9/2) maximal at xi = 2/7.
    const double xi = 2.0 / 7.0;
    const double b_bound =
        0.25 * std::pow(std::pow(xi, -2.0 / 9.0) + std::pow(xi, 7.0 / 9.0), -4.5);
    k.C0 = b_bound / 16.0;
    k.C0_rel = b_bound / 2.0;  // A~(0) = 1/2 replaces the A factor
    k.K = 2.0 / (k.C1 + k.C2);
    return k;
}

}  // namespace mycubic
