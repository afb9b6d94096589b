#pragma once

#include <stdexcept>

#include "mycubic/closed_form.hpp"

namespace mycubic {

// Gauss 2F1(a, b; c; z) series request. Series form requires |z| < 1 and
// c not a nonpositive integer.
struct HypergeometricSpec {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;
    long max_terms = 20000;
    double target_tol = 1e-12;
};

struct SeriesSum {
    double value = 0.0;
    long terms = 0;
    bool achieved_tol = false;
};

// Raised when the series does not meet target_tol within max_terms.
class SeriesNonConvergence : public std::runtime_error {
  public:
    SeriesNonConvergence(double partial, long terms_used, double last)
        : std::runtime_error("2F1 series did not converge within max_terms"),
          partial_sum(partial),
          terms(terms_used),
          last_term(last) {}

    double partial_sum;
    long terms;
    double last_term;
};

// Result of the Kummer transformation
// F(a,b;c;z) = (1-z)^(-b) * F(c-a, b; c; z/(z-1)).
struct KummerTransform {
    HypergeometricSpec spec;
    double prefactor = 1.0;
};

/// Partial sums of sum (a)_n (b)_n / (c)_n * z^n / n! with compensated
/// accumulation, stopping when |term| < target_tol * |sum|.
SeriesSum gauss_2f1(const HypergeometricSpec& spec);

/// Kummer argument transformation; requires z < 1.
KummerTransform kummer_transform(const HypergeometricSpec& spec);

/// MY(x) = 1/(3*F(1/3, 2/3; 1/2; 1 - 27x/2)), evaluated through whichever
/// of the two series arguments (1 - 27x/2 or its Kummer image 1 - 2/(27x))
/// has the smaller magnitude. Supported window: 1e-3 <= x <= 1e4.
EvalResult my_hyper(double x);

}  // namespace mycubic
