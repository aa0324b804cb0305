#include "paulidyn/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "paulidyn/generator.hpp"

namespace paulidyn {

namespace {

constexpr double kWeightSumTol = 1e-12;

// splitmix64: per-trial substream derivation from (seed, index).
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

void validate_weight_vector(const std::vector<double>& weights, std::size_t n) {
    if (weights.size() != n) {
        throw InvalidWeightsError("mix: need one weight per channel");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw InvalidWeightsError("mix: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw InvalidWeightsError("mix: weights must sum to 1, got " + std::to_string(sum));
    }
}

}  // namespace

void MixtureWeights::validate() const {
    validate_weight_vector({a, b, c}, 3);
}

DecoherenceFunction::DecoherenceFunction(TimeFunction f) : f_(std::move(f)) {
    const int n = std::min(default_grid_points(0.0, f_.t_max()), 1 << 20);
    const double h = f_.t_max() / (n - 1);
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const double v = f_(t);
        if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) {
            throw OutOfDomainError("DecoherenceFunction: value " + std::to_string(v) +
                                   " at t = " + std::to_string(t) + " outside [0, 1]");
        }
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (std::abs(f_(0.0)) > 1e-12) {
        throw OutOfDomainError("DecoherenceFunction: f(0) must be 0");
    }
    // Refine the grid supremum; boundaries need no refinement.
    if (best_i > 0 && best_i + 1 < n) {
        const double lo = (best_i - 1) * h, hi = (best_i + 1) * h;
        const double t = minimize_golden([this](double u) { return -f_(u); }, lo, hi, 1e-10);
        if (f_(t) > best) {
            best = f_(t);
            sup_time_ = t;
        } else {
            sup_time_ = best_i * h;
        }
    } else {
        sup_time_ = best_i * h;
    }
    sup_value_ = best;
}

FlipChannel flip_channel(int axis, DecoherenceFunction f, std::string label) {
    if (axis < 1 || axis > 3) throw std::out_of_range("flip_channel: axis must be 1, 2 or 3");
    const double t_max = f.t_max();
    const TimeFunction& fn = f.function();

    TimeFunction unit([](double) { return 1.0; }, [](double) { return 0.0; }, t_max);
    TimeFunction off;
    if (fn.has_derivative()) {
        off = TimeFunction([fn](double t) { return 1.0 - 2.0 * fn(t); },
                           [fn](double t) { return -2.0 * fn.analytic_derivative(t); },
                           t_max);
    } else {
        off = TimeFunction([fn](double t) { return 1.0 - 2.0 * fn(t); }, t_max);
    }

    std::array<TimeFunction, 3> lam;
    for (int j = 1; j <= 3; ++j) lam[j - 1] = (j == axis) ? unit : off;
    if (label.empty()) label = "flip-" + std::to_string(axis);
    PauliChannel ch(lam[0], lam[1], lam[2], label);
    ch.set_log_derivative(axis, [](double) { return 0.0; });
    return {axis, std::move(f), std::move(ch)};
}

PauliChannel mix(const std::vector<PauliChannel>& channels,
                 const std::vector<double>& weights, std::string label) {
    if (channels.empty()) throw InvalidWeightsError("mix: no channels given");
    validate_weight_vector(weights, channels.size());
    const double t_max = channels.front().t_max();
    for (const auto& ch : channels) {
        if (std::abs(ch.t_max() - t_max) > 1e-12 * std::max(1.0, t_max)) {
            throw OutOfDomainError("mix: channels must share a domain");
        }
    }

    std::array<TimeFunction, 3> lam;
    for (int axis = 1; axis <= 3; ++axis) {
        bool all_analytic = true;
        std::vector<TimeFunction> parts;
        parts.reserve(channels.size());
        for (const auto& ch : channels) {
            parts.push_back(ch.lambda(axis));
            all_analytic = all_analytic && parts.back().has_derivative();
        }
        auto value = [parts, weights](double t) {
            double sum = 0.0;
            for (std::size_t i = 0; i < parts.size(); ++i) sum += weights[i] * parts[i](t);
            return sum;
        };
        if (all_analytic) {
            auto deriv = [parts, weights](double t) {
                double sum = 0.0;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    sum += weights[i] * parts[i].analytic_derivative(t);
                }
                return sum;
            };
            lam[axis - 1] = TimeFunction(value, deriv, t_max);
        } else {
            lam[axis - 1] = TimeFunction(value, t_max);
        }
    }
    if (label.empty()) label = "mixture";
    return PauliChannel(lam[0], lam[1], lam[2], std::move(label));
}

PauliChannel axis_mixture(const std::vector<FlipChannel>& components,
                          const std::vector<double>& weights, std::string label) {
    if (components.empty()) throw InvalidWeightsError("axis_mixture: no components");
    validate_weight_vector(weights, components.size());
    bool seen[4] = {false, false, false, false};
    for (const auto& c : components) {
        if (seen[c.axis]) {
            throw InvalidWeightsError("axis_mixture: one flip channel per axis");
        }
        seen[c.axis] = true;
    }
    const double t_max = components.front().channel.t_max();

    std::array<TimeFunction, 3> lam;
    for (int axis = 1; axis <= 3; ++axis) {
        // Components on the same axis contribute lambda = 1; the rest 1 - 2f.
        std::vector<TimeFunction> fs;
        std::vector<double> ws;
        bool analytic = true;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (components[i].axis == axis) continue;
            fs.push_back(components[i].decoherence.function());
            ws.push_back(weights[i]);
            analytic = analytic && fs.back().has_derivative();
        }
        auto value = [fs, ws](double t) {
            double acc = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) acc += ws[i] * fs[i](t);
            return 1.0 - 2.0 * acc;
        };
        if (analytic) {
            auto deriv = [fs, ws](double t) {
                double acc = 0.0;
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    acc += ws[i] * fs[i].analytic_derivative(t);
                }
                return -2.0 * acc;
            };
            lam[axis - 1] = TimeFunction(value, deriv, t_max);
        } else {
            lam[axis - 1] = TimeFunction(value, t_max);
        }
    }
    if (label.empty()) label = "axis-mixture";
    return PauliChannel(lam[0], lam[1], lam[2], std::move(label));
}

ChannelTypeVerdict classify_type(const DecoherenceFunction& f, double horizon,
                                 double tol) {
    if (horizon > f.t_max()) {
        throw OutOfDomainError("classify_type: horizon exceeds the function domain");
    }
    ChannelTypeVerdict verdict;

    // Supremum over [0, horizon]: grid scan plus golden-section refinement.
    const int n = std::min(default_grid_points(0.0, horizon), 1 << 20);
    const double h = horizon / (n - 1);
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < n; ++i) {
        const double v = f(i * h);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    if (best_i > 0 && best_i + 1 < n) {
        const double t = minimize_golden([&f](double u) { return -f(u); },
                                         (best_i - 1) * h, (best_i + 1) * h, 1e-10);
        best = std::max(best, f(t));
    }
    verdict.sup_value = best;

    if (best < 0.5 - tol) {
        verdict.type = ChannelType::NonSingular;
    } else if (best <= 0.5 + tol) {
        verdict.type = ChannelType::TypeI;
    } else {
        verdict.type = ChannelType::TypeII;
    }

    if (verdict.type != ChannelType::NonSingular) {
        TimeFunction shifted;
        const TimeFunction& fn = f.function();
        if (fn.has_derivative()) {
            shifted = TimeFunction([fn](double t) { return fn(t) - 0.5; },
                                   [fn](double t) { return fn.analytic_derivative(t); },
                                   fn.t_max());
        } else {
            shifted = TimeFunction([fn](double t) { return fn(t) - 0.5; }, fn.t_max());
        }
        verdict.attaining_times = find_roots(shifted, 0.0, horizon, n, 1e-9);
    }
    return verdict;
}

const char* to_string(ChannelType type) {
    switch (type) {
        case ChannelType::NonSingular: return "NonSingular";
        case ChannelType::TypeI: return "TypeI";
        case ChannelType::TypeII: return "TypeII";
    }
    return "?";
}

namespace {

// Trial families for the convexity harness. Non-singular draws keep
// sup f < 1/2 by construction; the injected variant saturates above 1/2.
DecoherenceFunction draw_decoherence(std::mt19937_64& rng, double horizon,
                                     bool inject_type2) {
    if (inject_type2) {
        const double amp = uniform(rng, 0.55, 0.95);
        const double rate = uniform(rng, 0.3, 2.0);
        return DecoherenceFunction(TimeFunction(
            [amp, rate](double t) { return amp * (1.0 - std::exp(-rate * t)); },
            [amp, rate](double t) { return amp * rate * std::exp(-rate * t); }, horizon));
    }
    if (uniform01(rng) < 0.5) {
        const double amp = uniform(rng, 0.05, 0.49);
        const double mu = uniform(rng, 0.2, 3.0);
        return DecoherenceFunction(TimeFunction(
            [amp, mu](double t) {
                const double s = std::sin(mu * t);
                return amp * s * s;
            },
            [amp, mu](double t) { return amp * mu * std::sin(2.0 * mu * t); }, horizon));
    }
    const double g0 = uniform(rng, 0.1, 2.0);
    return DecoherenceFunction(TimeFunction(
        [g0](double t) { return 0.5 * (1.0 - std::exp(-2.0 * g0 * t)); },
        [g0](double t) { return g0 * std::exp(-2.0 * g0 * t); }, horizon));
}

struct TrialOutcome {
    double min_lambda = 1.0;
    int min_axis = 0;
    double min_time = 0.0;
    bool violated = false;
    double bound_margin = 1.0;  // min over axes of lambda_min - (1 - off-axis weight)
};

TrialOutcome run_trial(std::uint64_t seed, const Lemma1Options& opts) {
    std::mt19937_64 rng(seed);
    std::vector<FlipChannel> comps;
    for (int axis = 1; axis <= 3; ++axis) {
        comps.push_back(
            flip_channel(axis, draw_decoherence(rng, opts.horizon, opts.inject_type2)));
    }
    double w[3];
    double sum = 0.0;
    for (double& x : w) {
        x = uniform(rng, 1e-3, 1.0);
        sum += x;
    }
    std::vector<double> weights = {w[0] / sum, w[1] / sum, w[2] / sum};
    // Renormalize exactly so the weight validation cannot trip on rounding.
    weights[2] = 1.0 - weights[0] - weights[1];
    const PauliChannel mixture = axis_mixture(comps, weights);

    TrialOutcome out;
    const double h = opts.horizon / (opts.grid - 1);
    for (int i = 0; i < opts.grid; ++i) {
        const double t = i * h;
        const LambdaTriple l = mixture.lambdas(t);
        for (int axis = 1; axis <= 3; ++axis) {
            const double v = l[axis];
            if (v < out.min_lambda) {
                out.min_lambda = v;
                out.min_axis = axis;
                out.min_time = t;
            }
            // Strict bound: lambda_j > 1 - (sum of weights on the other two
            // axes), i.e. lambda_j > w_j.
            out.bound_margin = std::min(out.bound_margin, v - weights[axis - 1]);
        }
    }
    out.violated = out.min_lambda <= 0.0;
    return out;
}

}  // namespace

Lemma1Report verify_lemma1(const Lemma1Options& opts) {
    if (opts.trials < 1) throw std::invalid_argument("verify_lemma1: need trials >= 1");
    if (opts.grid < 2) throw std::invalid_argument("verify_lemma1: need grid >= 2");

    Lemma1Report report;
    report.trials = opts.trials;

    std::vector<TrialOutcome> outcomes(opts.trials);
    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, opts.trials));

    auto worker = [&](unsigned tid) {
        for (int i = tid; i < opts.trials; i += threads) {
            outcomes[i] = run_trial(splitmix64(opts.seed ^ (0x10001ULL * (i + 1))), opts);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    for (int i = 0; i < opts.trials; ++i) {
        const TrialOutcome& o = outcomes[i];
        if (o.min_lambda < report.min_lambda) {
            report.min_lambda = o.min_lambda;
            report.min_trial = i;
            report.min_axis = o.min_axis;
            report.min_time = o.min_time;
        }
        report.worst_bound_margin = std::min(report.worst_bound_margin, o.bound_margin);
        if (o.violated) {
            ++report.failures;
            if (report.failure_list.size() < 32) {
                report.failure_list.push_back({i, o.min_axis, o.min_time, o.min_lambda});
            }
        }
    }
    report.strict_bound_ok = report.worst_bound_margin > -1e-9;
    return report;
}

SynchronizationReport synchronization_report(const PauliChannel& mixture,
                                             const std::vector<FlipChannel>& components,
                                             const std::vector<double>& weights,
                                             double horizon, double coincidence_tol) {
    validate_weight_vector(weights, components.size());
    SynchronizationReport report;

    for (const auto& c : components) {
        const ChannelTypeVerdict v = classify_type(c.decoherence, horizon);
        report.components.push_back({c.axis, v.attaining_times});
    }

    const SingularityReport sing = singular_points(mixture, horizon);
    for (const auto& p : sing.points) {
        SynchronizationReport::MixturePoint mp;
        mp.t = p.t_star;
        mp.vanishing = p.vanishing;
        mp.synchronized = true;
        // A vanishing lambda_j is fed by every nonzero-weight component on
        // the other axes; synchronization means each of them is singular at
        // the same instant.
        for (int axis = 1; axis <= 3; ++axis) {
            if (!p.vanishing[axis - 1]) continue;
            for (std::size_t i = 0; i < components.size(); ++i) {
                if (components[i].axis == axis || weights[i] == 0.0) continue;
                bool hit = false;
                for (double ct : report.components[i].singular_times) {
                    if (std::abs(ct - p.t_star) <= coincidence_tol) {
                        hit = true;
                        break;
                    }
                }
                mp.synchronized = mp.synchronized && hit;
            }
        }
        report.all_synchronized = report.all_synchronized && mp.synchronized;
        report.mixture_points.push_back(mp);
    }
    return report;
}

}  // namespace paulidyn
