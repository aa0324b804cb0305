#include "paulidyn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace paulidyn {

namespace {

constexpr double kDomainSlack = 1e-9;

double bisect(const TimeFunction& f, double a, double b, double fa, double tol) {
    // fa and f(b) have opposite signs on entry.
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void TimeFunction::check_domain(double t) const {
    if (!value_) throw OutOfDomainError("TimeFunction: evaluating an empty function");
    const double slack = kDomainSlack * std::max(1.0, std::abs(t_max_));
    if (t < -slack || t > t_max_ + slack) {
        throw OutOfDomainError("TimeFunction: t = " + std::to_string(t) +
                               " outside [0, " + std::to_string(t_max_) + "]");
    }
}

double differentiate(const TimeFunction& f, double t) {
    const double h = 1e-6 * std::max(1.0, std::abs(t));
    return differentiate(f, t, h);
}

double differentiate(const TimeFunction& f, double t, double h) {
    if (f.has_derivative()) return f.analytic_derivative(t);
    if (h <= 0.0) throw OutOfDomainError("differentiate: step must be positive");
    if (t - h < 0.0 || t + h > f.t_max()) {
        throw OutOfDomainError("differentiate: stencil [t-h, t+h] leaves the domain");
    }
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

double integrate(const TimeFunction& f, double t0, double t1, int n) {
    if (t1 < t0) return -integrate(f, t1, t0, n);
    if (t0 == t1) return 0.0;
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    for (double p : f.poles()) {
        if (p > t0 && p < t1) {
            throw PoleInRangeError("integrate: pole at t = " + std::to_string(p) +
                                   " inside [" + std::to_string(t0) + ", " +
                                   std::to_string(t1) + "]");
        }
    }
    const double h = (t1 - t0) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(t0 + i * h);
    for (int i = 2; i < n; i += 2) even += f(t0 + i * h);
    return (h / 3.0) * (f(t0) + f(t1) + 4.0 * odd + 2.0 * even);
}

int default_grid_points(double t0, double t1) {
    const double span = std::max(t1 - t0, 0.0);
    const double pts = span * kGridPointsPerUnit;
    return std::max(16, static_cast<int>(std::ceil(pts)));
}

double minimize_golden(const std::function<double(double)>& f, double a, double b,
                       double xtol) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> find_roots(const TimeFunction& f, double t0, double t1,
                               int grid_points, double tol) {
    if (!(t1 > t0) || t0 < 0.0) {
        throw OutOfDomainError("find_roots: need t1 > t0 >= 0");
    }
    if (grid_points < 2) throw OutOfDomainError("find_roots: need at least 2 grid points");
    if (!(tol > 0.0)) throw OutOfDomainError("find_roots: tol must be positive");

    const int n = grid_points;
    const double h = (t1 - t0) / (n - 1);
    std::vector<double> ts(n), vs(n);
    for (int i = 0; i < n; ++i) {
        ts[i] = t0 + i * h;
        vs[i] = f(ts[i]);
    }

    std::vector<double> roots;

    // Grid points already at a zero.
    for (int i = 0; i < n; ++i) {
        if (std::abs(vs[i]) < tol) roots.push_back(ts[i]);
    }

    // Sign changes, refined by bisection.
    std::vector<bool> cell_has_crossing(n - 1, false);
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(vs[i]) < tol || std::abs(vs[i + 1]) < tol) continue;
        if ((vs[i] < 0.0) != (vs[i + 1] < 0.0)) {
            cell_has_crossing[i] = true;
            roots.push_back(bisect(f, ts[i], ts[i + 1], vs[i], tol));
        }
    }

    // Tangential pass: local minima of |f| without a nearby crossing are
    // refined by golden-section search; a refined minimum that dips under
    // tol is a touching zero. When an analytic derivative exists and
    // changes sign across the refined point, a bisection on it sharpens
    // the abscissa.
    for (int i = 1; i + 1 < n; ++i) {
        const double ai = std::abs(vs[i]);
        if (ai >= std::abs(vs[i - 1]) || ai > std::abs(vs[i + 1])) continue;
        if (ai < tol) continue;  // already captured
        if (cell_has_crossing[i - 1] || cell_has_crossing[i]) continue;

        const double lo = ts[i - 1], hi = ts[i + 1];
        double t_min = minimize_golden([&](double t) { return std::abs(f(t)); }, lo, hi,
                                       1e-10 * std::max(1.0, std::abs(hi)));
        if (f.has_derivative()) {
            const double dl = f.analytic_derivative(lo);
            const double dh = f.analytic_derivative(hi);
            if ((dl < 0.0) != (dh < 0.0)) {
                TimeFunction deriv([&f](double t) { return f.analytic_derivative(t); },
                                   f.t_max());
                t_min = bisect(deriv, lo, hi, dl, 1e-14 * std::max(1.0, std::abs(hi)));
            }
        }
        if (std::abs(f(t_min)) < tol) roots.push_back(t_min);
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (merged.empty() || r - merged.back() > tol) {
            merged.push_back(r);
        }
    }
    return merged;
}

}  // namespace paulidyn
