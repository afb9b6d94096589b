#pragma once

namespace mycubic {

// Depressed cubic y^3 + p*y + q = 0.
struct DepressedCubic {
    double p = 0.0;
    double q = 0.0;
};

// General cubic a*x^3 + b*x^2 + c*x + d = 0, a != 0.
struct GeneralCubic {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

}  // namespace mycubic
