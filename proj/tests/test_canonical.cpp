#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mycubic/canonical.hpp"
#include "mycubic/closed_form.hpp"

using namespace mycubic;

TEST_CASE("f_canonical known values") {
    CHECK(f_canonical(0.0) == 0.0);
    CHECK(f_canonical(1.0 / 3.0) == doctest::Approx(2.0 / 27.0).epsilon(1e-15));
    CHECK(f_canonical(-2.0 / 3.0) == doctest::Approx(2.0 / 27.0).epsilon(1e-15));
    CHECK(f_canonical(1.0) == 1.0);
    CHECK(f_canonical(3.0) == 18.0);
    CHECK(f_canonical(-1.0) == 0.0);
}

TEST_CASE("classify_target scenarios and boundaries") {
    CHECK(classify_target(0.12) == Scenario::UniqueAboveMax);
    CHECK(classify_target(-0.08) == Scenario::UniqueNegative);
    CHECK(classify_target(0.05) == Scenario::ThreeReal);
    CHECK(classify_target(0.0) == Scenario::ThreeReal);
    CHECK(classify_target(2.0 / 27.0) == Scenario::ThreeReal);
    CHECK(classify_target(std::nextafter(2.0 / 27.0, 1.0)) == Scenario::UniqueAboveMax);
    CHECK_THROWS_AS(classify_target(std::nan("")), std::domain_error);
}

TEST_CASE("reflect about -1/3") {
    CHECK(reflect(-1.0 / 3.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(reflect(0.0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(reflect(1.0 / 3.0) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("symmetry identity on random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 100000; ++i) {
        const double z = u(rng);
        const double lhs = f_canonical(reflect(z));
        const double rhs = 2.0 / 27.0 - f_canonical(z);
        CHECK(std::fabs(lhs - rhs) <= 1e-15 * (1.0 + std::fabs(f_canonical(z))));
    }
}

TEST_CASE("transform1 target and backmap") {
    const CanonicalReduction r = transform1({1.0, 1.0});
    CHECK(r.t == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r.backmap.kind == Backmap::Kind::Reciprocal);

    const CanonicalReduction r2 = transform1({-3.0, 1.0});
    CHECK(r2.t == doctest::Approx(1.0 / 54.0).epsilon(1e-15));

    CHECK_THROWS_AS(transform1({1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(transform1({0.0, 1.0}), std::domain_error);

    // an exact root of the canonical equation backmaps to an exact root
    const double z = my(r2.t);  // (-3, 1): t = 1/54 > 0
    const double y = r2.backmap(z);
    CHECK(std::fabs(y * y * y - 3.0 * y + 1.0) <= 1e-12);
}

TEST_CASE("transform2 target and backmap") {
    const CanonicalReduction r = transform2({-3.0, 1.0});
    CHECK(r.t == doctest::Approx(1.0 / 54.0).epsilon(1e-15));
    CHECK(r.backmap.kind == Backmap::Kind::Affine);
    CHECK(r.backmap.scale == doctest::Approx(3.0).epsilon(1e-15));

    CHECK(transform2({-3.0, 0.0}).t == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
    CHECK_THROWS_AS(transform2({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(transform2({0.0, 1.0}), std::domain_error);

    const double z = my(r.t);
    const double y = r.backmap(z);
    CHECK(std::fabs(y * y * y - 3.0 * y + 1.0) <= 1e-12);
}

TEST_CASE("xi values and sign convention") {
    CHECK(xi({-3.0, 1.0}).value == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(xi({-3.0, 0.0}).value == 0.0);
    CHECK(xi({-3.0, -1.0}).value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(xi({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(xi({0.0, 1.0}), std::domain_error);
}

TEST_CASE("xi log-scaled path matches the plain formula where both work") {
    // plain formula, forced for comparison
    auto plain = [](double p, double q) {
        return (3.0 * q / (2.0 * p)) * std::sqrt(-3.0 / p);
    };
    // q above the 1e100 routing threshold but still in plain-formula range
    const double v = xi({-2.0, 1e101}).value;
    CHECK(v == doctest::Approx(plain(-2.0, 1e101)).epsilon(1e-12));
    const double w = xi({-1e-101, 1e-60}).value;
    CHECK(w == doctest::Approx(plain(-1e-101, 1e-60)).epsilon(1e-12));
}

TEST_CASE("xi survives magnitudes that overflow the plain formula") {
    // |xi| = sqrt(27/4)/|p|^(3/2) = (sqrt(27)/2) * 1e225 for p = -1e-150
    const double v = xi({-1e-150, 1.0}).value;
    const double expected = -(std::sqrt(27.0) / 2.0) * 1e225;
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("t-consistency between transform2 and xi") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 2000; ++i) {
        DepressedCubic c{-std::pow(10.0, u(rng)), std::pow(10.0, u(rng))};
        if (i % 2) c.q = -c.q;
        const double t = transform2(c).t;
        const double via = (1.0 + xi(c).value) / 27.0;
        CHECK(std::fabs(t - via) <= 1e-15 * (1.0 + std::fabs(t)));
    }
}

TEST_CASE("monotonic intervals of f") {
    double prev = f_canonical(0.0);
    for (int i = 1; i <= 500; ++i) {
        const double z = 10.0 * i / 500.0;
        CHECK(f_canonical(z) > prev);
        prev = f_canonical(z);
    }
    prev = f_canonical(-2.0 / 3.0);
    for (int i = 1; i <= 500; ++i) {
        const double z = -2.0 / 3.0 + (2.0 / 3.0) * i / 500.0;
        CHECK(f_canonical(z) < prev);
        prev = f_canonical(z);
    }
}
