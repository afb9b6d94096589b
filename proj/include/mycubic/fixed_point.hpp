#pragma once

#include <vector>

#include "mycubic/closed_form.hpp"

namespace mycubic {

// Constants of the convergence analysis.
//   C1: global bound on |d/dy fixed_point_map|, attained at y = 0, v = v0
//   C2: bound along the fixed-point curve, attained at z = z_star
//   C0, C0_rel: seed error bounds (absolute / relative)
//   K = 2/(C1 + C2): per-iteration error shrink factor
struct ConvergenceConstants {
    double C0 = 0.0;
    double C0_rel = 0.0;
    double C1 = 0.0;
    double C2 = 0.0;
    double K = 0.0;
    double v0 = 0.0;
    double z_star = 0.0;
};

struct IterationRow {
    int n = 0;
    double value = 0.0;
    double abs_err = 0.0;  // vs closed form
    double rel_err = 0.0;
};

struct IterationTrace {
    double x = 0.0;
    double reference = 0.0;  // closed-form MY(x)
    std::vector<IterationRow> rows;
};

// Certificate constants: the published seed bound and the conservative
// shrink factor used for stopping. Kept fixed so certified bounds are
// stable; convergence_constants() re-derives them independently.
inline constexpr double kSeedErrorBound = 1.0 / 694.061782;
inline constexpr double kShrinkFactor = 25.05;

/// The contraction map G(x, y) = cbrt(2x + 1/27 + sqrt(2x/(1+y))/3) - 1/3
/// whose fixed point in y is MY(x). Requires x >= 0, y >= 0.
double fixed_point_map(double x, double y);

/// Partial derivative of the map with respect to y; negative everywhere.
/// Requires x > 0, y >= 0.
double fixed_point_map_dy(double x, double y);

/// Seed approximation M0(x) = G(x, x^(2/5)).
double my_seed(double x);

/// M_n(x): the seed pushed through n applications of the map.
double my_iterated(double x, int n);

/// Rows 0..n of the iteration with absolute/relative error columns
/// measured against the closed form. Requires 0 <= n <= 64.
IterationTrace iterate(double x, int n);

/// Iterate until the certified bound kSeedErrorBound / kShrinkFactor^n
/// drops to tol. Never consults the closed form. Requires tol >= 1e-15.
EvalResult my_fixed(double x, double tol);

/// Re-derive C0, C0', C1, C2, K and their extremal points from the
/// closed-form expressions of the analysis.
ConvergenceConstants convergence_constants();

}  // namespace mycubic
