#include "paulidyn/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paulidyn {

namespace {

constexpr double kBranchEps = 1e-12;

std::vector<double> odd_half_pi_multiples(double omega, double t_max) {
    std::vector<double> ts;
    const double half_period = std::numbers::pi / (2.0 * omega);
    for (int k = 0; ; ++k) {
        const double t = (2 * k + 1) * half_period;
        if (t > t_max) break;
        ts.push_back(t);
    }
    return ts;
}

}  // namespace

double RTNParams::branch_value() const {
    const double ratio = 2.0 * d / w;
    return ratio * ratio - 1.0;
}

void RTNParams::validate() const {
    if (!(d > 0.0) || !(w > 0.0)) {
        throw std::invalid_argument("RTNParams: d and w must be positive");
    }
}

double rtn_lambda(double t, const RTNParams& p) {
    p.validate();
    const double x = p.branch_value();
    const double wt = p.w * t;
    if (std::abs(x) < kBranchEps) {
        return std::exp(-wt) * (1.0 + wt);
    }
    if (x > 0.0) {
        const double mu = std::sqrt(x);
        return std::exp(-wt) * (std::sin(wt * mu) / mu + std::cos(wt * mu));
    }
    const double m = std::sqrt(-x);
    return std::exp(-wt) * (std::sinh(wt * m) / m + std::cosh(wt * m));
}

TimeFunction rtn_lambda_function(const RTNParams& p, double t_max) {
    p.validate();
    const double x = p.branch_value();
    const double w = p.w;
    if (std::abs(x) < kBranchEps) {
        return TimeFunction(
            [p](double t) { return rtn_lambda(t, p); },
            [w](double t) { return -w * w * t * std::exp(-w * t); }, t_max);
    }
    if (x > 0.0) {
        const double mu = std::sqrt(x);
        return TimeFunction(
            [p](double t) { return rtn_lambda(t, p); },
            [w, mu](double t) {
                return -w * std::exp(-w * t) * std::sin(w * t * mu) * (1.0 / mu + mu);
            },
            t_max);
    }
    const double m = std::sqrt(-x);
    return TimeFunction(
        [p](double t) { return rtn_lambda(t, p); },
        [w, m](double t) {
            return -w * std::exp(-w * t) * std::sinh(w * t * m) * (1.0 / m - m);
        },
        t_max);
}

FlipChannel cosine_flip(int axis, double mu, double t_max) {
    if (!(mu > 0.0)) throw std::invalid_argument("cosine_flip: mu must be positive");
    TimeFunction f(
        [mu](double t) {
            const double s = std::sin(mu * t);
            return 0.5 * s * s;
        },
        [mu](double t) { return 0.5 * mu * std::sin(2.0 * mu * t); }, t_max);
    return flip_channel(axis, DecoherenceFunction(std::move(f)),
                        "cosine-flip-" + std::to_string(axis));
}

FlipChannel semigroup_flip(int axis, double gamma0, double t_max) {
    if (!(gamma0 > 0.0)) {
        throw std::invalid_argument("semigroup_flip: gamma0 must be positive");
    }
    TimeFunction f([gamma0](double t) { return 0.5 * (1.0 - std::exp(-2.0 * gamma0 * t)); },
                   [gamma0](double t) { return gamma0 * std::exp(-2.0 * gamma0 * t); },
                   t_max);
    return flip_channel(axis, DecoherenceFunction(std::move(f)),
                        "semigroup-flip-" + std::to_string(axis));
}

FlipChannel rtn_flip(int axis, const RTNParams& p, double t_max, bool require_confined) {
    TimeFunction lam = rtn_lambda_function(p, t_max);
    if (require_confined) {
        const int n = default_grid_points(0.0, t_max);
        const double h = t_max / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double v = lam(i * h);
            if (v < -1e-9) {
                throw std::invalid_argument(
                    "rtn_flip: kernel leaves [0, 1] at t = " + std::to_string(i * h) +
                    " (Lambda = " + std::to_string(v) + "); pick 2d <= w for confinement");
            }
        }
    }
    TimeFunction f([lam](double t) { return 0.5 * (1.0 - lam(t)); },
                   [lam](double t) { return -0.5 * lam.analytic_derivative(t); }, t_max);
    return flip_channel(axis, DecoherenceFunction(std::move(f)),
                        "rtn-flip-" + std::to_string(axis));
}

PauliChannel isotropic_rtn(const RTNParams& p, const MixtureWeights& weights,
                           double t_max, bool require_confined) {
    weights.validate();
    std::vector<FlipChannel> comps;
    for (int axis = 1; axis <= 3; ++axis) {
        comps.push_back(rtn_flip(axis, p, t_max, require_confined));
    }
    return axis_mixture(comps, {weights.a, weights.b, weights.c}, "isotropic-rtn");
}

PauliChannel rate_defined_dephasing(const TimeFunction& rate, int axis,
                                    std::string label) {
    if (axis < 1 || axis > 3) {
        throw std::out_of_range("rate_defined_dephasing: axis must be 1, 2 or 3");
    }
    if (!rate.poles().empty()) {
        throw PoleInRangeError(
            "rate_defined_dephasing: rate has poles; use a family constructor that "
            "carries the accumulated integral across them");
    }
    const double t_max = rate.t_max();
    // Quadrature resolution scales with the integration span.
    auto accumulated = [rate](double t) {
        const int n = std::max(64, static_cast<int>(std::ceil(t * 512.0)));
        return integrate(rate, 0.0, t, n);
    };
    TimeFunction off([accumulated](double t) { return std::exp(-2.0 * accumulated(t)); },
                     [accumulated, rate](double t) {
                         return -2.0 * rate(t) * std::exp(-2.0 * accumulated(t));
                     },
                     t_max);
    TimeFunction unit([](double) { return 1.0; }, [](double) { return 0.0; }, t_max);

    std::array<TimeFunction, 3> lam;
    for (int j = 1; j <= 3; ++j) lam[j - 1] = (j == axis) ? unit : off;
    if (label.empty()) label = "rate-dephasing-" + std::to_string(axis);
    PauliChannel ch(lam[0], lam[1], lam[2], std::move(label));
    for (int j = 1; j <= 3; ++j) {
        if (j == axis) {
            ch.set_log_derivative(j, [](double) { return 0.0; });
        } else {
            ch.set_log_derivative(j, [rate](double t) { return -2.0 * rate(t); });
        }
    }
    return ch;
}

TimeFunction tan_rate(double omega, double t_max) {
    if (!(omega > 0.0)) throw std::invalid_argument("tan_rate: omega must be positive");
    TimeFunction f([omega](double t) { return std::tan(omega * t); },
                   [omega](double t) {
                       const double c = std::cos(omega * t);
                       return omega / (c * c);
                   },
                   t_max);
    f.set_poles(odd_half_pi_multiples(omega, t_max));
    return f;
}

TimeFunction tan2_rate(double omega, double t_max) {
    if (!(omega > 0.0)) throw std::invalid_argument("tan2_rate: omega must be positive");
    TimeFunction f([omega](double t) {
                       const double x = std::tan(omega * t);
                       return x * x;
                   },
                   [omega](double t) {
                       const double x = std::tan(omega * t);
                       const double c = std::cos(omega * t);
                       return 2.0 * x * omega / (c * c);
                   },
                   t_max);
    f.set_poles(odd_half_pi_multiples(omega, t_max));
    return f;
}

PauliChannel tan_rate_dephasing(double omega, int axis, double t_max) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("tan_rate_dephasing: omega must be positive");
    }
    if (axis < 1 || axis > 3) {
        throw std::out_of_range("tan_rate_dephasing: axis must be 1, 2 or 3");
    }
    // exp(-2 int tan) = |cos(omega t)|^{2/omega}, continued through each
    // rate pole where it touches zero.
    auto value = [omega](double t) {
        return std::pow(std::abs(std::cos(omega * t)), 2.0 / omega);
    };
    auto deriv = [omega, value](double t) { return -2.0 * std::tan(omega * t) * value(t); };
    TimeFunction off(value, deriv, t_max);
    TimeFunction unit([](double) { return 1.0; }, [](double) { return 0.0; }, t_max);

    std::array<TimeFunction, 3> lam;
    for (int j = 1; j <= 3; ++j) lam[j - 1] = (j == axis) ? unit : off;
    PauliChannel ch(lam[0], lam[1], lam[2], "tan-rate-dephasing");
    for (int j = 1; j <= 3; ++j) {
        if (j == axis) {
            ch.set_log_derivative(j, [](double) { return 0.0; });
        } else {
            ch.set_log_derivative(j, [omega](double t) { return -2.0 * std::tan(omega * t); });
        }
    }
    std::vector<PauliChannel::DeclaredZero> zeros;
    std::array<bool, 3> vanish = {true, true, true};
    vanish[axis - 1] = false;
    for (double t : odd_half_pi_multiples(omega, t_max)) zeros.push_back({t, vanish});
    ch.declare_zeros(std::move(zeros));
    return ch;
}

PauliChannel tan2_rate_dephasing(double omega, int axis, double t_max) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("tan2_rate_dephasing: omega must be positive");
    }
    if (axis < 1 || axis > 3) {
        throw std::out_of_range("tan2_rate_dephasing: axis must be 1, 2 or 3");
    }
    const double first_pole = std::numbers::pi / (2.0 * omega);
    // int_0^t tan^2(omega s) ds = tan(omega t)/omega - t on [0, first_pole);
    // the integral diverges at the pole, so the map is held at the fully
    // dephased value from there on.
    auto value = [omega, first_pole](double t) {
        if (t >= first_pole) return 0.0;
        return std::exp(-2.0 * (std::tan(omega * t) / omega - t));
    };
    auto deriv = [omega, value](double t) {
        const double x = std::tan(omega * t);
        return -2.0 * x * x * value(t);
    };
    TimeFunction off(value, deriv, t_max);
    TimeFunction unit([](double) { return 1.0; }, [](double) { return 0.0; }, t_max);

    std::array<TimeFunction, 3> lam;
    for (int j = 1; j <= 3; ++j) lam[j - 1] = (j == axis) ? unit : off;
    PauliChannel ch(lam[0], lam[1], lam[2], "tan2-rate-dephasing");
    for (int j = 1; j <= 3; ++j) {
        if (j == axis) {
            ch.set_log_derivative(j, [](double) { return 0.0; });
        } else {
            ch.set_log_derivative(j, [omega](double t) {
                const double x = std::tan(omega * t);
                return -2.0 * x * x;
            });
        }
    }
    std::vector<PauliChannel::DeclaredZero> zeros;
    std::array<bool, 3> vanish = {true, true, true};
    vanish[axis - 1] = false;
    for (double t : odd_half_pi_multiples(omega, t_max)) zeros.push_back({t, vanish});
    ch.declare_zeros(std::move(zeros));
    return ch;
}

}  // namespace paulidyn
