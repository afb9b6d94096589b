#pragma once

#include <utility>
#include <vector>

#include "mycubic/canonical.hpp"

namespace mycubic {

enum class Method {
    ClosedRadical,
    ClosedTrig,
    FixedPoint,
    Hypergeometric,
    Oracle,
};

const char* method_name(Method m) noexcept;

// One evaluation of MY(x). error_bound is a certified absolute bound on
// |value - MY(x)|; 0 means "machine precision" (closed forms).
struct EvalResult {
    double x = 0.0;
    double value = 0.0;
    Method method = Method::ClosedRadical;
    int iterations = 0;
    double error_bound = 0.0;
};

// Real roots of (z^3 + z^2)/2 = x, ascending, with multiplicity flags.
// ThreeReal always lists three entries (a double root appears twice).
struct CanonicalRoots {
    Scenario scenario = Scenario::ThreeReal;
    std::vector<double> roots;
    std::vector<int> multiplicity;
};

/// MY(x): the inverse of f(z) = (z^3+z^2)/2 on [0, inf). Plain value.
double my(double x);

/// MY(x) with method metadata. Radical branch for x >= 2/27, arccos
/// branch below. Requires x >= 0 and finite.
EvalResult my_closed(double x);

/// Single-fraction radical form of MY, valid for x >= 2/27 only.
double my_radical_alt(double x);

/// MY'(x) = 2/(3*MY(x)^2 + 2*MY(x)). Requires x > 0.
double my_derivative(double x);

/// The antiderivative of MY vanishing at 0:
/// (3/4)*x*MY(x) - x/12 + MY(x)^2/24. Requires x >= 0.
double my_antiderivative(double x);

/// Elementary envelope sqrt(2x/(1+x^(2/5))) <= MY(x) <= x^(2/5).
std::pair<double, double> bounds(double x);

/// All real roots of (z^3 + z^2)/2 = x expressed through MY.
CanonicalRoots canonical_roots(double x);

/// Given the nonnegative root z1 in [0, 1/3] of a ThreeReal target, the
/// two companion roots (z2 <= z3) from the factored quadratic.
std::pair<double, double> companion_roots(double z1);

}  // namespace mycubic
