#pragma once

// Shared numerical primitives over time-indexed scalar functions:
// evaluation with declared poles, differentiation, composite quadrature,
// and bracketed root finding with a tangential-zero pass.

#include <functional>
#include <vector>

#include "paulidyn/errors.hpp"

namespace paulidyn {

inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr int kGridPointsPerUnit = 4096;

// A scalar function of time on [0, t_max], optionally with an analytic
// derivative and a sorted list of pole times where evaluation diverges.
class TimeFunction {
public:
    TimeFunction() = default;

    TimeFunction(std::function<double(double)> value, double t_max)
        : value_(std::move(value)), t_max_(t_max) {}

    TimeFunction(std::function<double(double)> value,
                 std::function<double(double)> derivative, double t_max)
        : value_(std::move(value)), derivative_(std::move(derivative)), t_max_(t_max) {}

    double operator()(double t) const {
        check_domain(t);
        return value_(t);
    }

    bool has_derivative() const { return static_cast<bool>(derivative_); }

    // Analytic derivative; only valid when has_derivative().
    double analytic_derivative(double t) const {
        check_domain(t);
        return derivative_(t);
    }

    double t_max() const { return t_max_; }

    const std::vector<double>& poles() const { return poles_; }

    // Poles must be sorted ascending.
    void set_poles(std::vector<double> poles) { poles_ = std::move(poles); }

    bool empty() const { return !static_cast<bool>(value_); }

private:
    void check_domain(double t) const;

    std::function<double(double)> value_;
    std::function<double(double)> derivative_;
    double t_max_ = 0.0;
    std::vector<double> poles_;
};

// Derivative of f at t: the declared analytic derivative when present,
// otherwise the central difference (f(t+h) - f(t-h)) / 2h. The default
// step is 1e-6 * max(1, |t|).
double differentiate(const TimeFunction& f, double t);
double differentiate(const TimeFunction& f, double t, double h);

// Composite Simpson approximation of the integral of f over [t0, t1] with
// n subintervals (rounded up to even). Throws PoleInRangeError when a
// declared pole lies inside the range.
double integrate(const TimeFunction& f, double t0, double t1, int n);

// All zeros of f in [t0, t1], located by a uniform scan for sign changes
// (refined by bisection) plus a tangential pass that refines local minima
// of |f| by golden-section search and keeps those with |f| < tol. Results
// are sorted; roots closer than tol are merged.
std::vector<double> find_roots(const TimeFunction& f, double t0, double t1,
                               int grid_points, double tol = kDefaultRootTol);

// Grid resolution used when a caller does not specify one.
int default_grid_points(double t0, double t1);

// Golden-section minimizer on [a, b]; returns the abscissa of the minimum
// to within xtol. The callable is assumed unimodal on the bracket.
double minimize_golden(const std::function<double(double)>& f, double a, double b,
                       double xtol);

}  // namespace paulidyn
