#include "paulidyn/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace paulidyn {

namespace {

struct Coefficients {
    double a1, a2, a3;  // dr_j/dt = a_j r_j
};

Coefficients coefficients(const DecayRates& rates, double t) {
    const double g1 = rates(1, t);
    const double g2 = rates(2, t);
    const double g3 = rates(3, t);
    return {-2.0 * (g2 + g3), -2.0 * (g1 + g3), -2.0 * (g1 + g2)};
}

// One RK4 step of the decoupled linear system.
BlochState rk4_step(const DecayRates& rates, const BlochState& s, double t, double dt) {
    auto f = [&rates](double u, const BlochState& x) {
        const Coefficients c = coefficients(rates, u);
        return BlochState{c.a1 * x.r1, c.a2 * x.r2, c.a3 * x.r3};
    };
    auto axpy = [](const BlochState& x, double a, const BlochState& k) {
        return BlochState{x.r1 + a * k.r1, x.r2 + a * k.r2, x.r3 + a * k.r3};
    };
    const BlochState k1 = f(t, s);
    const BlochState k2 = f(t + 0.5 * dt, axpy(s, 0.5 * dt, k1));
    const BlochState k3 = f(t + 0.5 * dt, axpy(s, 0.5 * dt, k2));
    const BlochState k4 = f(t + dt, axpy(s, dt, k3));
    return {s.r1 + dt / 6.0 * (k1.r1 + 2 * k2.r1 + 2 * k3.r1 + k4.r1),
            s.r2 + dt / 6.0 * (k1.r2 + 2 * k2.r2 + 2 * k3.r2 + k4.r2),
            s.r3 + dt / 6.0 * (k1.r3 + 2 * k2.r3 + 2 * k3.r3 + k4.r3)};
}

void integrate_segment(const DecayRates& rates, BlochState s, double t0, double t1,
                       double dt, TrajectoryRecord& record) {
    record.times.push_back(t0);
    record.states.push_back(s);
    double t = t0;
    while (t < t1 - 1e-15 * std::max(1.0, t1)) {
        const double step = std::min(dt, t1 - t);
        s = rk4_step(rates, s, t, step);
        t += step;
        record.times.push_back(t);
        record.states.push_back(s);
    }
}

void check_dt(double dt, double horizon) {
    if (!(dt > 0.0) || dt >= horizon) {
        throw OutOfDomainError("evolve: need 0 < dt < horizon");
    }
}

}  // namespace

TrajectoryRecord evolve(const DecayRates& rates, const BlochState& s0, double horizon,
                        double dt) {
    check_dt(dt, horizon);
    for (double p : rates.pole_times) {
        if (p >= 0.0 && p <= horizon) {
            throw PoleInRangeError("evolve: rate pole at t = " + std::to_string(p) +
                                   " inside [0, " + std::to_string(horizon) +
                                   "]; no excision policy for bare rates");
        }
    }
    TrajectoryRecord record;
    integrate_segment(rates, s0, 0.0, horizon, dt, record);
    return record;
}

TrajectoryRecord evolve(const PauliChannel& ch, const BlochState& s0, double horizon,
                        double dt) {
    check_dt(dt, horizon);
    if (horizon > ch.t_max()) {
        throw OutOfDomainError("evolve: horizon exceeds the channel domain");
    }
    const DecayRates rates = decay_rates(ch);

    // Excision windows around each pole, merged when overlapping.
    std::vector<std::pair<double, double>> windows;
    for (double p : rates.pole_times) {
        if (p < 0.0 || p > horizon + 10.0 * dt) continue;
        const double lo = p - 10.0 * dt;
        const double hi = p + 10.0 * dt;
        if (!windows.empty() && lo <= windows.back().second) {
            windows.back().second = hi;
        } else {
            windows.push_back({lo, hi});
        }
    }

    TrajectoryRecord record;
    record.excised_windows = windows;
    double t = 0.0;
    BlochState s = s0;
    for (const auto& [lo, hi] : windows) {
        if (lo > t) integrate_segment(rates, s, t, lo, dt, record);
        t = hi;
        if (t >= horizon) break;
        // Restart from the closed-form map value at the right edge.
        s = apply(ch, s0, t);
    }
    if (t < horizon) integrate_segment(rates, s, t, horizon, dt, record);

    for (std::size_t i = 0; i < record.times.size(); ++i) {
        const LambdaTriple l = ch.lambdas(record.times[i]);
        record.lambda_traces[0].push_back(l.l1);
        record.lambda_traces[1].push_back(l.l2);
        record.lambda_traces[2].push_back(l.l3);
    }
    return record;
}

double roundtrip_error(const PauliChannel& ch, double horizon, double dt) {
    double worst = 0.0;
    for (int axis = 1; axis <= 3; ++axis) {
        BlochState s0{axis == 1 ? 1.0 : 0.0, axis == 2 ? 1.0 : 0.0, axis == 3 ? 1.0 : 0.0};
        const TrajectoryRecord record = evolve(ch, s0, horizon, dt);
        for (std::size_t i = 0; i < record.times.size(); ++i) {
            const double expected = record.lambda_traces[axis - 1][i];
            const double simulated =
                axis == 1 ? record.states[i].r1
                          : (axis == 2 ? record.states[i].r2 : record.states[i].r3);
            worst = std::max(worst, std::abs(simulated - expected));
        }
    }
    return worst;
}

}  // namespace paulidyn
