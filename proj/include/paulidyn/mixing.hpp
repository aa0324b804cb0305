#pragma once

// Convex mixing of Pauli channels: single-axis flip channels built from a
// decoherence function, the closed-form mixture eigenvalues, singular-type
// classification, the randomized convexity harness, and synchronization
// analysis of component singularities.

#include <cstdint>
#include <string>
#include <vector>

#include "paulidyn/channel.hpp"

namespace paulidyn {

// Tolerance on the supremum when deciding the singular type.
inline constexpr double kTypeTol = 1e-6;

struct MixtureWeights {
    double a = 0.0, b = 0.0, c = 0.0;

    // Throws InvalidWeightsError unless a, b, c >= 0 and a+b+c = 1 (1e-12).
    void validate() const;
};

// A decoherence function: 0 <= f(t) <= 1 with f(0) = 0, validated on a
// dense grid at construction. Carries the grid-refined supremum.
class DecoherenceFunction {
public:
    explicit DecoherenceFunction(TimeFunction f);

    double operator()(double t) const { return f_(t); }
    const TimeFunction& function() const { return f_; }
    double sup_value() const { return sup_value_; }
    double sup_time() const { return sup_time_; }
    double t_max() const { return f_.t_max(); }

private:
    TimeFunction f_;
    double sup_value_ = 0.0;
    double sup_time_ = 0.0;
};

// A single-axis flip channel together with the decoherence function that
// generated it (needed for synchronization analysis).
struct FlipChannel {
    int axis = 1;
    DecoherenceFunction decoherence;
    PauliChannel channel;
};

// lambda_axis = 1, lambda_other = 1 - 2 f on the two remaining axes.
FlipChannel flip_channel(int axis, DecoherenceFunction f, std::string label = {});

// Pointwise convex combination: eigenvalues of the mixture are the weighted
// sums of the component eigenvalues. Throws InvalidWeightsError on bad
// weights, OutOfDomainError on mismatched domains.
PauliChannel mix(const std::vector<PauliChannel>& channels,
                 const std::vector<double>& weights, std::string label = {});

// Closed-form mixture of one flip channel per axis (axes must be distinct):
// lambda_j = 1 - 2 * sum over components on other axes of w_i f_i.
PauliChannel axis_mixture(const std::vector<FlipChannel>& components,
                          const std::vector<double>& weights, std::string label = {});

enum class ChannelType { NonSingular, TypeI, TypeII };

struct ChannelTypeVerdict {
    ChannelType type = ChannelType::NonSingular;
    double sup_value = 0.0;
    std::vector<double> attaining_times;  // where f crosses or touches 1/2
};

// NonSingular when sup f < 1/2 - tol over [0, horizon]; TypeI when the
// supremum equals 1/2 within tol; TypeII when it exceeds 1/2 + tol.
ChannelTypeVerdict classify_type(const DecoherenceFunction& f, double horizon,
                                 double tol = kTypeTol);

const char* to_string(ChannelType type);

struct Lemma1Options {
    int trials = 1000;
    std::uint64_t seed = 42;
    double horizon = 10.0;
    int grid = 2048;
    bool inject_type2 = false;  // test hook: draw singular components instead
    unsigned threads = 0;       // 0: hardware concurrency
};

struct Lemma1Failure {
    int trial = 0;
    int axis = 0;
    double t = 0.0;
    double lambda = 0.0;
};

struct Lemma1Report {
    int trials = 0;
    int failures = 0;
    double min_lambda = 1.0;
    int min_trial = 0;
    int min_axis = 0;
    double min_time = 0.0;
    bool strict_bound_ok = true;    // lambda_j > 1 - (weights off axis j) - 1e-9
    double worst_bound_margin = 1.0;
    std::vector<Lemma1Failure> failure_list;
};

// Randomized convexity check: mixtures of non-singular flip channels keep
// every eigenvalue strictly positive. Trials draw per-axis decoherence
// functions from bounded-amplitude oscillating and saturating families with
// sup < 1/2 and random weights; any trial with min lambda <= 0 is recorded
// as a failure (an implementation-bug signal).
Lemma1Report verify_lemma1(const Lemma1Options& opts);

struct SynchronizationReport {
    struct Component {
        int axis = 0;
        std::vector<double> singular_times;  // f = 1/2 attainment times
    };
    struct MixturePoint {
        double t = 0.0;
        std::array<bool, 3> vanishing = {false, false, false};
        bool synchronized = false;  // all contributing components singular at t
    };
    std::vector<Component> components;
    std::vector<MixturePoint> mixture_points;
    bool all_synchronized = true;
};

// Lists each component's f = 1/2 times, the mixture's singular times, and
// whether each mixture singularity coincides with simultaneous component
// singularities of every contributing (nonzero-weight, other-axis) channel.
SynchronizationReport synchronization_report(const PauliChannel& mixture,
                                             const std::vector<FlipChannel>& components,
                                             const std::vector<double>& weights,
                                             double horizon,
                                             double coincidence_tol = 1e-6);

}  // namespace paulidyn
