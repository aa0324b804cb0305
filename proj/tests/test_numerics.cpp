#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paulidyn/numerics.hpp"

using namespace paulidyn;

namespace {

constexpr double pi = std::numbers::pi;

TimeFunction sin_squared(double t_max) {
    return TimeFunction([](double t) { return std::sin(t) * std::sin(t); }, t_max);
}

}  // namespace

TEST_CASE("differentiate: constant function has zero derivative") {
    TimeFunction f([](double) { return 1.0; }, 10.0);
    CHECK(differentiate(f, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("differentiate: sin^2 at pi/4 against the finite-difference oracle") {
    TimeFunction f = sin_squared(10.0);
    // Independent oracle: central difference with a hand-picked step.
    const double t = pi / 4.0;
    const double h = 1e-5;
    const double oracle = (f(t + h) - f(t - h)) / (2.0 * h);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(differentiate(f, t) == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(differentiate(f, t) == doctest::Approx(std::sin(2.0 * t)).epsilon(1e-8));
}

TEST_CASE("differentiate: exponential with a declared derivative works at t = 0") {
    TimeFunction f([](double t) { return std::exp(-2.0 * t); },
                   [](double t) { return -2.0 * std::exp(-2.0 * t); }, 10.0);
    CHECK(differentiate(f, 0.0) == doctest::Approx(-2.0).epsilon(1e-12));
    // Finite-difference oracle away from the boundary agrees.
    TimeFunction g([](double t) { return std::exp(-2.0 * t); }, 10.0);
    CHECK(differentiate(g, 0.5) == doctest::Approx(-2.0 * std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("differentiate: declared derivative wins over a poisoned eval") {
    TimeFunction f([](double) { return 1e9; }, [](double) { return 7.0; }, 10.0);
    CHECK(differentiate(f, 1.0) == doctest::Approx(7.0));
}

TEST_CASE("differentiate: finite-difference stencil outside the domain throws") {
    TimeFunction f([](double t) { return t; }, 10.0);
    CHECK_THROWS_AS(differentiate(f, 0.0), OutOfDomainError);
    CHECK_THROWS_AS(differentiate(f, 10.0), OutOfDomainError);
}

TEST_CASE("integrate: constant") {
    TimeFunction f([](double) { return 1.0; }, 10.0);
    CHECK(integrate(f, 0.0, 2.0, 64) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("integrate: tan over [0, pi/4] matches ln sqrt(2)") {
    TimeFunction f([](double t) { return std::tan(t); }, 2.0);
    CHECK(integrate(f, 0.0, pi / 4.0, 512) ==
          doctest::Approx(std::log(std::sqrt(2.0))).epsilon(1e-10));
}

TEST_CASE("integrate: tan^2 over [0, pi/4] matches 1 - pi/4") {
    TimeFunction f([](double t) { return std::tan(t) * std::tan(t); }, 2.0);
    CHECK(integrate(f, 0.0, pi / 4.0, 512) == doctest::Approx(1.0 - pi / 4.0).epsilon(1e-10));
}

TEST_CASE("integrate: fourth-order convergence on a smooth integrand") {
    TimeFunction f([](double t) { return std::exp(t) * std::cos(3.0 * t); }, 4.0);
    const double exact =
        (std::exp(2.0) * (std::cos(6.0) + 3.0 * std::sin(6.0)) - 1.0) / 10.0;
    const double coarse = std::abs(integrate(f, 0.0, 2.0, 16) - exact);
    const double fine = std::abs(integrate(f, 0.0, 2.0, 32) - exact);
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("integrate: declared pole inside the range throws") {
    TimeFunction f([](double t) { return std::tan(t); }, 4.0);
    f.set_poles({pi / 2.0});
    CHECK_THROWS_AS(integrate(f, 0.0, 2.0, 64), PoleInRangeError);
    CHECK_NOTHROW(integrate(f, 0.0, 1.5, 64));
}

TEST_CASE("find_roots: cos^2 has touching zeros at odd multiples of pi/2") {
    TimeFunction f([](double t) { return std::cos(t) * std::cos(t); },
                   [](double t) { return -std::sin(2.0 * t); }, 8.0);
    const auto roots = find_roots(f, 0.0, 4.0, 4000, 1e-9);
    REQUIRE(roots.size() == 1);  // 3 pi/2 > 4
    CHECK(roots[0] == doctest::Approx(pi / 2.0).epsilon(1e-8));

    const auto more = find_roots(f, 0.0, 6.0, 6000, 1e-9);
    REQUIRE(more.size() == 2);
    CHECK(more[0] == doctest::Approx(pi / 2.0).epsilon(1e-8));
    CHECK(more[1] == doctest::Approx(3.0 * pi / 2.0).epsilon(1e-8));
}

TEST_CASE("find_roots: touching zeros are found without an analytic derivative") {
    TimeFunction f([](double t) { return std::cos(t) * std::cos(t); }, 6.0);
    const auto roots = find_roots(f, 0.0, 6.0, 6000, 1e-9);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(pi / 2.0).epsilon(1e-6));
    CHECK(roots[1] == doctest::Approx(3.0 * pi / 2.0).epsilon(1e-6));
}

TEST_CASE("find_roots: constant one has no zeros") {
    TimeFunction f([](double) { return 1.0; }, 10.0);
    CHECK(find_roots(f, 0.0, 10.0, 1000).empty());
}

TEST_CASE("find_roots: transversal zeros of sin are neither missed nor duplicated") {
    TimeFunction f([](double t) { return std::sin(t); }, 20.0);
    const auto roots = find_roots(f, 0.5, 20.0, 8000, 1e-9);
    REQUIRE(roots.size() == 6);  // pi, 2pi, ..., 6pi
    for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(roots[i] == doctest::Approx((i + 1) * pi).epsilon(1e-9));
    }
}

TEST_CASE("find_roots: first zero of the two-cosine mixture eigenvalue") {
    // 1 - sin^2(t)/2 - sin^2(t)/2 = cos^2(t)
    TimeFunction f([](double t) { return 1.0 - std::sin(t) * std::sin(t); }, 4.0);
    const auto roots = find_roots(f, 0.0, 4.0, 4000, 1e-9);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(pi / 2.0).epsilon(1e-6));
}

TEST_CASE("find_roots: near-zero dip that stays positive is not reported") {
    TimeFunction f([](double t) {
        const double d = t - 2.0;
        return d * d + 1e-6;
    }, 4.0);
    CHECK(find_roots(f, 0.0, 4.0, 4000, 1e-9).empty());
}

TEST_CASE("minimize_golden: locates a parabola minimum") {
    const double t = minimize_golden([](double x) { return (x - 1.25) * (x - 1.25); },
                                     0.0, 3.0, 1e-10);
    CHECK(t == doctest::Approx(1.25).epsilon(1e-7));
}

TEST_CASE("TimeFunction: evaluation outside the domain throws") {
    TimeFunction f([](double t) { return t; }, 1.0);
    CHECK_THROWS_AS(f(1.5), OutOfDomainError);
    CHECK_THROWS_AS(f(-0.5), OutOfDomainError);
    CHECK(f(1.0) == doctest::Approx(1.0));
}
