#pragma once

// Canonical decay rates of a Pauli channel, singularity location and
// sign-window classification, and the CP-divisibility decision.

#include <array>
#include <optional>
#include <vector>

#include "paulidyn/channel.hpp"

namespace paulidyn {

// Negative-rate detection threshold (finite-difference noise floor).
inline constexpr double kRateNegativeTol = 1e-8;

// The three canonical rates of the time-local master equation. Each is a
// TimeFunction whose declared poles are the zeros of the map eigenvalues.
struct DecayRates {
    std::array<TimeFunction, 3> gamma;  // gamma[0] is the rate on sigma_1
    std::vector<double> pole_times;

    const TimeFunction& rate(int axis) const { return gamma.at(axis - 1); }
    double operator()(int axis, double t) const { return gamma.at(axis - 1)(t); }
};

// gamma_1 = (L1 - L2 - L3)/4 and cyclic, where L_j = d/dt ln lambda_j.
// L_j uses the channel's analytic log-derivative when declared, otherwise
// differentiate(lambda_j)/lambda_j.
DecayRates decay_rates(const PauliChannel& ch);

enum class SingularityKind { SignFlipping, NonFlipping };

struct SingularPoint {
    double t_star = 0.0;
    std::array<bool, 3> vanishing = {false, false, false};
    SingularityKind classification = SingularityKind::NonFlipping;
    std::array<int, 3> left_signs = {0, 0, 0};
    std::array<int, 3> right_signs = {0, 0, 0};
    double window = 0.0;  // half-width delta used for the sign comparison
};

struct SingularityReport {
    std::vector<SingularPoint> points;
    double horizon = 0.0;

    bool empty() const { return points.empty(); }
};

struct SingularScanOptions {
    int grid_points = 0;          // 0: default density over the horizon
    double tol = kDefaultRootTol;
};

// Zeros of the eigenvalues on [0, horizon] with vanishing-index attribution
// and sign-window classification. Channels that declare their zero set
// analytically are trusted; others are scanned.
SingularityReport singular_points(const PauliChannel& ch, double horizon,
                                  const SingularScanOptions& opts = {});

// Compares the sign of each rate at t_star - delta and t_star + delta.
// Throws IllConditionedWindowError when the window straddles another pole.
SingularityKind classify_singularity(const DecayRates& rates, double t_star,
                                     double delta);

// Half-width for sign windows: 1e-3 times the spacing to the nearest other
// pole (domain edges when there is none), clamped to [1e-6, 1e-2].
double classification_window(const std::vector<double>& pole_times, double t_star,
                             double horizon);

struct NegativeRateInterval {
    double t_start = 0.0;
    double t_end = 0.0;
    int rate_index = 0;  // 1..3
    double most_negative = 0.0;
};

struct DivisibilityVerdict {
    bool cp_divisible = true;
    std::vector<NegativeRateInterval> negative_rate_intervals;
};

// Scans the rates on a uniform grid, skipping pole neighborhoods of radius
// ten sign-window widths, and collects maximal intervals where a rate drops
// below -kRateNegativeTol.
DivisibilityVerdict is_cp_divisible(const PauliChannel& ch, double horizon, int grid);

struct IntermediateMap {
    LambdaTriple lambdas;
    ProbabilityVector probs;
    bool cp = false;
};

// Eigenvalues lambda_j(t_f)/lambda_j(t) of the map between t and t_f, with
// its CP verdict. Throws UndefinedIntermediateMapError when some
// lambda_j(t) vanishes within tolerance (the operational meaning of a
// singularity).
IntermediateMap intermediate_map(const PauliChannel& ch, double t, double t_f,
                                 double singular_tol = kDefaultRootTol);

// Pole-exclusion windows used by grid scans and sweep output.
std::vector<std::pair<double, double>> pole_windows(const std::vector<double>& pole_times,
                                                    double horizon);

}  // namespace paulidyn
