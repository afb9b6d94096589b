#include "mycubic/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mycubic {

const char* method_name(Method m) noexcept {
    switch (m) {
        case Method::ClosedRadical: return "closed-radical";
        case Method::ClosedTrig: return "closed-trig";
        case Method::FixedPoint: return "fixed-point";
        case Method::Hypergeometric: return "hypergeometric";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

namespace {

void require_nonneg(double x, const char* who) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(who) + ": requires finite x >= 0");
}

// Radical branch, x >= 2/27. With u = x - 1/27 and s = sqrt(x(x - 2/27)),
// MY = -1/3 + cbrt(u+s) + cbrt(u-s). Since (u-s)(u+s) = 1/729 exactly,
// cbrt(u-s) = 1/(9*cbrt(u+s)), which avoids the cancellation in u - s
// for large x.
// sqrt(x(x - 2/27)) without overflowing x^2 for huge x
double radical_disc_sqrt(double x) {
    if (x > 1e150) return x * std::sqrt(1.0 - kCanonicalMax / x);
    double disc = x * (x - kCanonicalMax);
    if (disc < 0.0 && std::fabs(disc) < 1e-18 * x * x) disc = 0.0;
    return std::sqrt(disc);
}

double my_radical(double x) {
    const double s = radical_disc_sqrt(x);
    const double u = x - 1.0 / 27.0;
    const double c = std::cbrt(u + s);
    return -1.0 / 3.0 + c + 1.0 / (9.0 * c);
}

// Trigonometric branch, 0 <= x < 2/27:
//   MY = -1/3 + (2/3) cos(arccos(27x - 1)/3).
// Rewritten with arccos(27x - 1) = pi - 2 asin(sqrt(27x/2)) and the
// cosine difference factored, so the result is a plain product and keeps
// full relative precision down to x = 0:
//   MY = (4/3) sin(pi/3 - h) sin(h),  h = asin(sqrt(27x/2))/3.
double my_trig(double x) {
    const double r = std::sqrt(std::clamp(13.5 * x, 0.0, 1.0));
    const double h = std::asin(r) / 3.0;
    constexpr double kThirdPi = 1.0471975511965977462;
    return (4.0 / 3.0) * std::sin(kThirdPi - h) * std::sin(h);
}

}  // namespace

double my(double x) {
    require_nonneg(x, "my");
    return x >= kCanonicalMax ? my_radical(x) : my_trig(x);
}

EvalResult my_closed(double x) {
    require_nonneg(x, "my_closed");
    EvalResult r;
    r.x = x;
    if (x >= kCanonicalMax) {
        r.value = my_radical(x);
        r.method = Method::ClosedRadical;
    } else {
        r.value = my_trig(x);
        r.method = Method::ClosedTrig;
    }
    r.iterations = 0;
    r.error_bound = 0.0;
    return r;
}

double my_radical_alt(double x) {
    if (!(x >= kCanonicalMax) || !std::isfinite(x))
        throw std::domain_error("my_radical_alt: requires x >= 2/27");
    const double s = radical_disc_sqrt(x);
    // x - s = (2x/27)/(x + s) and (x - 1/27) - s = (1/729)/((x - 1/27) + s):
    // both rationalized against the cancellation at large x
    const double numer = std::cbrt((4.0 * x / 27.0) * (x / (x + s)));
    const double denom = 1.0 / 3.0 + std::cbrt((1.0 / 729.0) / ((x - 1.0 / 27.0) + s));
    return numer / denom;
}

double my_derivative(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("my_derivative: requires x > 0");
    const double z = my(x);
    return 2.0 / (3.0 * z * z + 2.0 * z);
}

double my_antiderivative(double x) {
    require_nonneg(x, "my_antiderivative");
    const double z = my(x);
    return 0.75 * x * z - x / 12.0 + z * z / 24.0;
}

std::pair<double, double> bounds(double x) {
    require_nonneg(x, "bounds");
    if (x == 0.0) return {0.0, 0.0};
    const double r5 = std::pow(x, 0.2);
    const double upper = r5 * r5;
    const double lower = std::sqrt(2.0 * x / (1.0 + upper));
    return {lower, upper};
}

CanonicalRoots canonical_roots(double x) {
    const Scenario sc = classify_target(x);
    CanonicalRoots out;
    out.scenario = sc;
    switch (sc) {
        case Scenario::UniqueAboveMax:
            out.roots = {my(x)};
            out.multiplicity = {1};
            break;
        case Scenario::UniqueNegative:
            out.roots = {-2.0 / 3.0 - my(kCanonicalMax - x)};
            out.multiplicity = {1};
            break;
        case Scenario::ThreeReal: {
            const double z1 = my(x);
            const double z2 = -2.0 / 3.0 - my(kCanonicalMax - x);
            // Vieta product z1*z2*z3 = 2x; unlike the sum form it keeps
            // relative accuracy when z3 is tiny
            const double z3 = x == 0.0 ? 0.0 : 2.0 * x / (z1 * z2);
            out.roots = {z2, z3, z1};
            std::sort(out.roots.begin(), out.roots.end());
            out.multiplicity = {1, 1, 1};
            if (std::fabs(x) <= 1e-12) {
                out.multiplicity = {1, 2, 2};  // z3 = z1 = 0
            } else if (std::fabs(x - kCanonicalMax) <= 1e-12) {
                out.multiplicity = {2, 2, 1};  // z2 = z3 = -2/3
            }
            break;
        }
    }
    return out;
}

std::pair<double, double> companion_roots(double z1) {
    if (!(z1 >= 0.0 && z1 <= 1.0 / 3.0))
        throw std::domain_error("companion_roots: requires 0 <= z1 <= 1/3");
    double ratio = (1.0 - 3.0 * z1) / (1.0 + z1);
    if (ratio < 0.0) ratio = 0.0;  // last-ulp guard at z1 = 1/3
    const double s = std::sqrt(ratio);
    const double half = (1.0 + z1) / 2.0;
    return {-half * (1.0 + s), -half * (1.0 - s)};
}

}  // namespace mycubic
