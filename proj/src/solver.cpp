#include "mycubic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "mycubic/closed_form.hpp"
#include "mycubic/fixed_point.hpp"

namespace mycubic {

namespace {

using MyEval = std::function<double(double)>;

void require_finite(const DepressedCubic& c, const char* who) {
    if (!std::isfinite(c.p) || !std::isfinite(c.q))
        throw std::domain_error(std::string(who) + ": coefficients must be finite");
}

constexpr double kDoubleRootTol = 1e-12;  // in xi, ~sqrt(eps) of the canonical scale

std::array<double, 3> transform2_roots(double p, double xi_v, const MyEval& my_of) {
    const double s = std::sqrt(-p / 3.0);
    const double z_plus = my_of((1.0 + xi_v) / 27.0);
    const double z_minus = my_of((1.0 - xi_v) / 27.0);
    const double alpha = s * (3.0 * z_plus + 1.0);
    const double beta = 3.0 * s * (z_minus - z_plus);
    const double gamma = -s * (3.0 * z_minus + 1.0);
    return {alpha, beta, gamma};
}

// The case-4 middle root as gamma' of the reciprocal reduction,
// -q/(p(2/3 + MY(2/27 + q^2/(2p^3)))). Identical to beta but free of the
// cancellation in the transformation-2 difference when |xi| is tiny;
// keeps the middle-root residual at scale for extreme coefficients.
double middle_root_reciprocal(const DepressedCubic& c, const MyEval& my_of) {
    const double t_mirror = 2.0 / 27.0 + c.q * c.q / (2.0 * c.p * c.p * c.p);
    return -c.q / (c.p * (2.0 / 3.0 + my_of(std::max(t_mirror, 0.0))));
}

enum class CaseFourBeta { Reciprocal, Transform2 };

// True when the reduction targets ~ q^2/(2|p|^3) overflow. The cube-root
// root is then exact to well below one ulp, so case 1 applies.
bool reduction_overflows(const DepressedCubic& c) {
    if (std::fabs(c.p) < 1e-300) return true;
    if (c.q == 0.0) return false;
    const double lg = 2.0 * std::log(std::fabs(c.q)) - 3.0 * std::log(std::fabs(c.p));
    return lg > 709.0;
}

RootSet solve_depressed_with(const DepressedCubic& c, const MyEval& my_of,
                             CaseFourBeta beta_mode) {
    require_finite(c, "solve_depressed");
    RootSet out;

    // Case 1: p = 0 (and near-degenerate |p|, where 1/p^3 overflows).
    if (reduction_overflows(c)) {
        out.kind = RootKind::OneReal;
        out.roots = {-std::cbrt(c.q)};
        out.multiplicity = {c.q == 0.0 ? 3 : 1};
        out.case_id = 1;
        out.method_detail = "case 1 (p = 0): real cube root";
        return out;
    }

    // Case 2: p > 0, one real root through the reciprocal reduction.
    if (c.p > 0.0) {
        const double t = 2.0 / 27.0 + c.q * c.q / (2.0 * c.p * c.p * c.p);
        const double z1 = -2.0 / 3.0 - my_of(t);
        out.kind = RootKind::OneReal;
        out.roots = {c.q / (c.p * z1)};
        out.multiplicity = {1};
        out.case_id = 2;
        out.method_detail = "case 2 (p > 0): transformation 1";
        return out;
    }

    const double xi_v = xi(c).value;

    // Case 3: p < 0, |xi| > 1, one real root through the affine reduction.
    if (std::fabs(xi_v) > 1.0) {
        const double s = std::sqrt(-c.p / 3.0);
        const double sign = xi_v > 0.0 ? 1.0 : -1.0;
        out.kind = RootKind::OneReal;
        out.roots = {sign * s * (3.0 * my_of((1.0 + std::fabs(xi_v)) / 27.0) + 1.0)};
        out.multiplicity = {1};
        out.case_id = 3;
        out.method_detail = "case 3 (p < 0, |xi| > 1): transformation 2";
        return out;
    }

    // Case 4: p < 0, |xi| <= 1, three real roots gamma <= beta <= alpha.
    auto [alpha, beta, gamma] = transform2_roots(c.p, xi_v, my_of);
    if (beta_mode == CaseFourBeta::Reciprocal && c.q != 0.0)
        beta = middle_root_reciprocal(c, my_of);
    out.kind = RootKind::ThreeReal;
    out.roots = {gamma, beta, alpha};
    std::sort(out.roots.begin(), out.roots.end());
    out.multiplicity = {1, 1, 1};
    if (std::fabs(1.0 - xi_v) <= kDoubleRootTol) {
        out.multiplicity = {2, 2, 1};  // beta = gamma
    } else if (std::fabs(1.0 + xi_v) <= kDoubleRootTol) {
        out.multiplicity = {1, 2, 2};  // alpha = beta
    }
    out.case_id = 4;
    out.method_detail = "case 4 (p < 0, |xi| <= 1): transformation 2";
    return out;
}

}  // namespace

RootSet solve_depressed(const DepressedCubic& c) {
    return solve_depressed_with(c, [](double x) { return my(x); }, CaseFourBeta::Reciprocal);
}

RootSet solve_depressed_iterative(const DepressedCubic& c, int n) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("solve_depressed_iterative: requires 0 <= n <= 64");
    // the transformation-2 beta here: the n-step root estimates are defined
    // through that expression
    RootSet out = solve_depressed_with(
        c, [n](double x) { return my_iterated(x, n); }, CaseFourBeta::Transform2);
    out.method_detail += " with " + std::to_string(n) + "-step fixed point";
    return out;
}

std::array<double, 3> roots_transform2(const DepressedCubic& c) {
    require_finite(c, "roots_transform2");
    if (!(c.p < 0.0)) throw std::domain_error("roots_transform2: requires p < 0");
    const double xi_v = xi(c).value;
    if (std::fabs(xi_v) > 1.0)
        throw std::domain_error("roots_transform2: requires |xi| <= 1");
    return transform2_roots(c.p, xi_v, [](double x) { return my(x); });
}

std::array<double, 3> roots_transform1(const DepressedCubic& c) {
    require_finite(c, "roots_transform1");
    if (!(c.p < 0.0)) throw std::domain_error("roots_transform1: requires p < 0");
    if (c.q == 0.0) throw std::domain_error("roots_transform1: requires q != 0");
    if (std::fabs(xi(c).value) > 1.0)
        throw std::domain_error("roots_transform1: requires |xi| <= 1");
    const double t = -c.q * c.q / (2.0 * c.p * c.p * c.p);
    const double z1 = my(t);
    const double mirror = my(2.0 / 27.0 - t);
    const double z2 = -2.0 / 3.0 - mirror;
    const double alpha_p = c.q / (c.p * z1);
    // beta' = q/(p*z3) with the Vieta product z3 = 2t/(z1*z2), which
    // simplifies to -p^2*z1*z2/q; the sum form mirror - z1 - 1/3 cancels
    // for tiny t. p/q first: p^2 can overflow where beta' itself is fine.
    const double beta_p = -(c.p / c.q) * c.p * z1 * z2;
    const double gamma_p = -c.q / (c.p * (2.0 / 3.0 + mirror));
    return {alpha_p, beta_p, gamma_p};
}

std::array<double, 3> viete_trig_roots(const DepressedCubic& c) {
    require_finite(c, "viete_trig_roots");
    if (!(c.p < 0.0)) throw std::domain_error("viete_trig_roots: requires p < 0");
    double xi_v = xi(c).value;
    if (std::fabs(xi_v) > 1.0 + 1e-12)
        throw std::domain_error("viete_trig_roots: requires |xi| <= 1");
    xi_v = std::clamp(xi_v, -1.0, 1.0);
    const double scale = 2.0 * std::sqrt(-c.p / 3.0);
    const double theta = std::acos(xi_v) / 3.0;
    const double two_thirds_pi = 2.0 * std::acos(-1.0) / 3.0;
    std::array<double, 3> t;
    for (int k = 0; k < 3; ++k) t[k] = scale * std::cos(theta - k * two_thirds_pi);
    return t;  // t2 <= t1 <= t0 by the angle ranges
}

DepressedCubic depress(const GeneralCubic& g) {
    if (!std::isfinite(g.a) || !std::isfinite(g.b) || !std::isfinite(g.c) ||
        !std::isfinite(g.d))
        throw std::domain_error("depress: coefficients must be finite");
    if (g.a == 0.0) throw std::domain_error("depress: requires a != 0");
    const double shift = g.b / (3.0 * g.a);
    DepressedCubic dep;
    dep.p = g.c / g.a - g.b * g.b / (3.0 * g.a * g.a);
    dep.q = 2.0 * shift * shift * shift - g.b * g.c / (3.0 * g.a * g.a) + g.d / g.a;
    return dep;
}

RootSet solve_general(const GeneralCubic& g) {
    const DepressedCubic dep = depress(g);
    const double shift = g.b / (3.0 * g.a);
    RootSet out = solve_depressed(dep);
    for (double& r : out.roots) r -= shift;  // y = x + b/(3a)
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace mycubic
