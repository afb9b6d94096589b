#include "mycubic/canonical.hpp"

#include <cmath>
#include <stdexcept>

namespace mycubic {

double Backmap::operator()(double z) const {
    if (kind == Kind::Affine) return scale * z + offset;
    return num / (den * z);
}

double f_canonical(double z) noexcept {
    // z^2*(z+1)/2 keeps the cancellation near z = -1 in a single subtraction
    return z * z * (z + 1.0) / 2.0;
}

Scenario classify_target(double x) {
    if (!std::isfinite(x)) throw std::domain_error("classify_target: x must be finite");
    if (x > kCanonicalMax) return Scenario::UniqueAboveMax;
    if (x < 0.0) return Scenario::UniqueNegative;
    return Scenario::ThreeReal;
}

double reflect(double z) noexcept { return -2.0 / 3.0 - z; }

CanonicalReduction transform1(const DepressedCubic& c) {
    if (!std::isfinite(c.p) || !std::isfinite(c.q))
        throw std::domain_error("transform1: coefficients must be finite");
    if (c.p == 0.0 || c.q == 0.0)
        throw std::domain_error("transform1: requires p != 0 and q != 0");
    CanonicalReduction r;
    r.t = -c.q * c.q / (2.0 * c.p * c.p * c.p);
    r.backmap.kind = Backmap::Kind::Reciprocal;
    r.backmap.num = c.q;
    r.backmap.den = c.p;
    return r;
}

CanonicalReduction transform2(const DepressedCubic& c) {
    if (!std::isfinite(c.p) || !std::isfinite(c.q))
        throw std::domain_error("transform2: coefficients must be finite");
    if (c.p >= 0.0) throw std::domain_error("transform2: requires p < 0");
    CanonicalReduction r;
    r.t = 1.0 / 27.0 - c.q / (2.0 * std::sqrt(-27.0 * c.p * c.p * c.p));
    const double s = std::sqrt(-3.0 * c.p);
    r.backmap.kind = Backmap::Kind::Affine;
    r.backmap.scale = s;
    r.backmap.offset = s / 3.0;
    return r;
}

Xi xi(const DepressedCubic& c) {
    if (!std::isfinite(c.p) || !std::isfinite(c.q))
        throw std::domain_error("xi: coefficients must be finite");
    if (c.p >= 0.0) throw std::domain_error("xi: requires p < 0");
    if (c.q == 0.0) return Xi{0.0};
    const double ap = -c.p;
    const double aq = std::fabs(c.q);
    const double sign = c.q > 0.0 ? -1.0 : 1.0;  // sign(xi) = -sign(q)
    if (ap < 1e-100 || aq > 1e100) {
        // |xi| = sqrt(27 q^2 / (4 |p|^3)); the square is exact, so take
        // the root on log-scaled factors to dodge overflow
        const double log_abs =
            0.5 * (std::log(27.0) - std::log(4.0)) + std::log(aq) - 1.5 * std::log(ap);
        return Xi{sign * std::exp(log_abs)};
    }
    return Xi{(3.0 * c.q / (2.0 * c.p)) * std::sqrt(-3.0 / c.p)};
}

}  // namespace mycubic
