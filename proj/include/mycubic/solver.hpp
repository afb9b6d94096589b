#pragma once

#include <array>
#include <string>
#include <vector>

#include "mycubic/canonical.hpp"
#include "mycubic/cubic.hpp"

namespace mycubic {

enum class RootKind { OneReal, ThreeReal };

// Real roots of a cubic, ascending, with multiplicity flags and a record
// of which case (1-4) and transformation produced them.
struct RootSet {
    RootKind kind = RootKind::OneReal;
    std::vector<double> roots;
    std::vector<int> multiplicity;
    int case_id = 0;
    std::string method_detail;
};

/// Solve y^3 + p*y + q = 0 over the reals through MY.
/// Case 1 (p = 0): -cbrt(q). Case 2 (p > 0): reciprocal reduction.
/// Case 3 (p < 0, |xi| > 1): sign(xi)*sqrt(-p/3)*(3*MY((1+|xi|)/27)+1).
/// Case 4 (p < 0, |xi| <= 1): three real roots via the affine reduction.
RootSet solve_depressed(const DepressedCubic& c);

/// Case 4 roots (alpha, beta, gamma), gamma <= beta <= alpha:
///   alpha = sqrt(-p/3)*(3*MY((1+xi)/27) + 1)
///   beta  = 3*sqrt(-p/3)*(MY((1-xi)/27) - MY((1+xi)/27))
///   gamma = -sqrt(-p/3)*(3*MY((1-xi)/27) + 1)
/// Requires p < 0 and |xi| <= 1.
std::array<double, 3> roots_transform2(const DepressedCubic& c);

/// The same roots through the reciprocal reduction (alpha', beta',
/// gamma'). As sets they coincide with roots_transform2; the labels map
/// by the sign of q. Requires p < 0, |xi| <= 1 and q != 0.
std::array<double, 3> roots_transform1(const DepressedCubic& c);

/// Trigonometric roots t_k = 2*sqrt(-p/3)*cos(acos(xi)/3 - 2k*pi/3),
/// k = 0, 1, 2, ordered t2 <= t1 <= t0. Requires p < 0 and |xi| <= 1.
std::array<double, 3> viete_trig_roots(const DepressedCubic& c);

/// Coefficients of the depressed cubic reached by y = x + b/(3a).
DepressedCubic depress(const GeneralCubic& c);

/// Depress a*x^3 + b*x^2 + c*x + d via y = x + b/(3a), solve, map back.
RootSet solve_general(const GeneralCubic& c);

/// solve_depressed with every MY evaluation replaced by the n-th
/// fixed-point iterate M_n.
RootSet solve_depressed_iterative(const DepressedCubic& c, int n);

}  // namespace mycubic
