#include "paulidyn/generator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace paulidyn {

namespace {

int sign_with_deadband(double x, double deadband) {
    if (x > deadband) return 1;
    if (x < -deadband) return -1;
    return 0;
}

// d/dt ln lambda_axis at t.
double log_derivative(const PauliChannel& ch, int axis, double t) {
    if (ch.has_log_derivative(axis)) return ch.log_derivative(axis, t);
    const TimeFunction& lam = ch.lambda(axis);
    return differentiate(lam, t) / lam(t);
}

std::vector<double> scan_zeros(const PauliChannel& ch, int axis, double horizon,
                               const SingularScanOptions& opts) {
    const int grid = opts.grid_points > 0 ? opts.grid_points
                                          : default_grid_points(0.0, horizon);
    return find_roots(ch.lambda(axis), 0.0, horizon, grid, opts.tol);
}

}  // namespace

DecayRates decay_rates(const PauliChannel& ch) {
    DecayRates out;

    // Poles of the rates are the eigenvalue zeros over the full domain.
    if (ch.zeros_declared()) {
        for (const auto& z : ch.declared_zeros()) out.pole_times.push_back(z.t);
    } else {
        SingularScanOptions opts;
        std::vector<double> all;
        for (int axis = 1; axis <= 3; ++axis) {
            const auto zs = scan_zeros(ch, axis, ch.t_max(), opts);
            all.insert(all.end(), zs.begin(), zs.end());
        }
        std::sort(all.begin(), all.end());
        for (double z : all) {
            if (out.pole_times.empty() || z - out.pole_times.back() > opts.tol) {
                out.pole_times.push_back(z);
            }
        }
    }

    // Capture the channel by value; it is immutable.
    const std::array<std::array<double, 3>, 3> coeff = {{
        {+1, -1, -1},
        {-1, +1, -1},
        {-1, -1, +1},
    }};
    for (int j = 0; j < 3; ++j) {
        auto value = [ch, row = coeff[j]](double t) {
            double sum = 0.0;
            for (int axis = 1; axis <= 3; ++axis) {
                sum += row[axis - 1] * log_derivative(ch, axis, t);
            }
            return 0.25 * sum;
        };
        out.gamma[j] = TimeFunction(value, ch.t_max());
        out.gamma[j].set_poles(out.pole_times);
    }
    return out;
}

double classification_window(const std::vector<double>& pole_times, double t_star,
                             double horizon) {
    double spacing = std::min(t_star, horizon - t_star);
    for (double p : pole_times) {
        const double d = std::abs(p - t_star);
        if (d > kDefaultRootTol) spacing = std::min(spacing, d);
    }
    if (!(spacing > 0.0)) spacing = 1e-3;
    return std::clamp(1e-3 * spacing, 1e-6, 1e-2);
}

SingularityKind classify_singularity(const DecayRates& rates, double t_star,
                                     double delta) {
    const double lo = t_star - delta;
    const double hi = t_star + delta;
    if (lo < 0.0 || hi > rates.gamma[0].t_max()) {
        throw IllConditionedWindowError("classify_singularity: window leaves the domain");
    }
    for (double p : rates.pole_times) {
        if (std::abs(p - t_star) <= kDefaultRootTol) continue;
        if (p > lo && p < hi) {
            throw IllConditionedWindowError(
                "classify_singularity: window around t* = " + std::to_string(t_star) +
                " straddles the pole at t = " + std::to_string(p));
        }
    }
    for (int axis = 1; axis <= 3; ++axis) {
        const int sl = sign_with_deadband(rates(axis, lo), kRateNegativeTol);
        const int sr = sign_with_deadband(rates(axis, hi), kRateNegativeTol);
        if (sl != sr) return SingularityKind::SignFlipping;
    }
    return SingularityKind::NonFlipping;
}

SingularityReport singular_points(const PauliChannel& ch, double horizon,
                                  const SingularScanOptions& opts) {
    if (horizon > ch.t_max()) {
        throw OutOfDomainError("singular_points: horizon exceeds the channel domain");
    }
    SingularityReport report;
    report.horizon = horizon;

    std::vector<SingularPoint> points;
    if (ch.zeros_declared()) {
        for (const auto& z : ch.declared_zeros()) {
            if (z.t <= horizon) points.push_back({z.t, z.vanishing, {}, {}, {}, 0.0});
        }
    } else {
        std::vector<std::pair<double, int>> hits;  // (t, axis)
        for (int axis = 1; axis <= 3; ++axis) {
            for (double z : scan_zeros(ch, axis, horizon, opts)) hits.push_back({z, axis});
        }
        std::sort(hits.begin(), hits.end());
        for (const auto& [t, axis] : hits) {
            if (!points.empty() && t - points.back().t_star <= opts.tol) {
                points.back().vanishing[axis - 1] = true;
            } else {
                SingularPoint p;
                p.t_star = t;
                p.vanishing[axis - 1] = true;
                points.push_back(p);
            }
        }
    }
    if (points.empty()) return report;

    const DecayRates rates = decay_rates(ch);
    for (auto& p : points) {
        const double delta = classification_window(rates.pole_times, p.t_star, horizon);
        p.window = delta;
        p.classification = classify_singularity(rates, p.t_star, delta);
        for (int axis = 1; axis <= 3; ++axis) {
            p.left_signs[axis - 1] =
                sign_with_deadband(rates(axis, p.t_star - delta), kRateNegativeTol);
            p.right_signs[axis - 1] =
                sign_with_deadband(rates(axis, p.t_star + delta), kRateNegativeTol);
        }
    }
    report.points = std::move(points);
    return report;
}

std::vector<std::pair<double, double>> pole_windows(const std::vector<double>& pole_times,
                                                    double horizon) {
    std::vector<std::pair<double, double>> windows;
    for (double p : pole_times) {
        if (p > horizon) continue;
        const double delta = classification_window(pole_times, p, horizon);
        windows.push_back({p - 10.0 * delta, p + 10.0 * delta});
    }
    return windows;
}

DivisibilityVerdict is_cp_divisible(const PauliChannel& ch, double horizon, int grid) {
    if (grid < 2) grid = default_grid_points(0.0, horizon) / 4;
    const DecayRates rates = decay_rates(ch);
    const auto windows = pole_windows(rates.pole_times, horizon);
    const auto excluded = [&windows](double t) {
        for (const auto& [lo, hi] : windows) {
            if (t >= lo && t <= hi) return true;
        }
        return false;
    };

    DivisibilityVerdict verdict;
    const double h = horizon / (grid - 1);
    for (int axis = 1; axis <= 3; ++axis) {
        bool in_run = false;
        NegativeRateInterval run;
        for (int i = 0; i < grid; ++i) {
            const double t = i * h;
            bool negative = false;
            double value = 0.0;
            if (!excluded(t)) {
                value = rates(axis, t);
                negative = value < -kRateNegativeTol;
            }
            if (negative && !in_run) {
                in_run = true;
                run = {t, t, axis, value};
            } else if (negative && in_run) {
                run.t_end = t;
                run.most_negative = std::min(run.most_negative, value);
            } else if (!negative && in_run) {
                in_run = false;
                verdict.negative_rate_intervals.push_back(run);
            }
        }
        if (in_run) verdict.negative_rate_intervals.push_back(run);
    }
    std::sort(verdict.negative_rate_intervals.begin(),
              verdict.negative_rate_intervals.end(),
              [](const NegativeRateInterval& a, const NegativeRateInterval& b) {
                  return a.t_start < b.t_start;
              });
    verdict.cp_divisible = verdict.negative_rate_intervals.empty();
    return verdict;
}

IntermediateMap intermediate_map(const PauliChannel& ch, double t, double t_f,
                                 double singular_tol) {
    if (t_f < t) throw OutOfDomainError("intermediate_map: need t_f >= t");
    const LambdaTriple at_t = ch.lambdas(t);
    for (int axis = 1; axis <= 3; ++axis) {
        if (std::abs(at_t[axis]) <= singular_tol) {
            throw UndefinedIntermediateMapError(
                "intermediate_map: lambda_" + std::to_string(axis) + "(t) vanishes at t = " +
                std::to_string(t) + "; the intermediate map is undefined");
        }
    }
    const LambdaTriple at_tf = ch.lambdas(t_f);
    IntermediateMap out;
    out.lambdas = {at_tf.l1 / at_t.l1, at_tf.l2 / at_t.l2, at_tf.l3 / at_t.l3};
    out.probs = lambdas_to_probs(out.lambdas);
    out.cp = out.probs.min_entry() >= -kCpTolerance;
    return out;
}

}  // namespace paulidyn
