#pragma once

#include "mycubic/cubic.hpp"

namespace mycubic {

// f(-2/3) = f(1/3) = 2/27, the local maximum of the canonical function.
inline constexpr double kCanonicalMax = 2.0 / 27.0;

// Root count/location of the canonical equation (z^3 + z^2)/2 = x.
enum class Scenario {
    UniqueAboveMax,  // x > 2/27: one real root, above 1/3
    UniqueNegative,  // x < 0: one real root, negative
    ThreeReal,       // 0 <= x <= 2/27: three real roots, two may coincide
};

// Map taking a canonical root z back to a depressed-cubic root y.
// Affine: y = scale*z + offset. Reciprocal: y = num/(den*z), z != 0.
struct Backmap {
    enum class Kind { Affine, Reciprocal };
    Kind kind = Kind::Affine;
    double scale = 1.0;
    double offset = 0.0;
    double num = 0.0;
    double den = 1.0;

    double operator()(double z) const;
};

// Reduction of a depressed cubic to canonical form (z^3 + z^2)/2 = t.
struct CanonicalReduction {
    double t = 0.0;
    Backmap backmap;
};

// Normalized parameter xi = (3q/2p)*sqrt(-3/p), defined for p < 0.
// |xi| <= 1 characterizes the three-real-root regime.
struct Xi {
    double value = 0.0;
};

/// Canonical function f(z) = (z^3 + z^2)/2, evaluated as z^2*(z+1)/2.
double f_canonical(double z) noexcept;

/// Classify a target x of f(z) = x. Boundary values 0 and 2/27 count as
/// ThreeReal (double roots).
Scenario classify_target(double x);

/// Reflection about the symmetry point -1/3: z -> -2/3 - z.
double reflect(double z) noexcept;

/// Substitution z = q/(p*y). Requires p != 0 and q != 0.
CanonicalReduction transform1(const DepressedCubic& c);

/// Substitution z = y/sqrt(-3p) - 1/3. Requires p < 0.
CanonicalReduction transform2(const DepressedCubic& c);

/// xi = (3q/2p)*sqrt(-3/p). Requires p < 0. Overflow-safe for extreme p, q.
Xi xi(const DepressedCubic& c);

}  // namespace mycubic
