#pragma once

// Built-in parametric channel families: cosine-oscillation flips, semigroup
// flips, random-telegraph-noise channels, and rate-defined dephasing.

#include <string>
#include <vector>

#include "paulidyn/mixing.hpp"

namespace paulidyn {

inline constexpr double kDefaultFamilyHorizon = 30.0;

// Random telegraph noise: spectral bandwidth w = 1/(2 tau) and coupling
// strength d. The kernel oscillates for 2d > w and decays monotonically on
// the hyperbolic branch 2d < w.
struct RTNParams {
    double d = 1.0;
    double w = 1.0;

    // (2d/w)^2 - 1; sign selects the trigonometric or hyperbolic branch.
    double branch_value() const;
    bool oscillatory() const { return branch_value() > 0.0; }

    void validate() const;  // throws std::invalid_argument unless d, w > 0
};

// The RTN memory kernel Lambda(t); Lambda(0) = 1, |Lambda| <= 1.
double rtn_lambda(double t, const RTNParams& p);

// Same kernel as a TimeFunction with its analytic derivative.
TimeFunction rtn_lambda_function(const RTNParams& p, double t_max);

// Flip channel with f(t) = sin^2(mu t) / 2; the decoherence function
// oscillates between 0 and 1/2 (singular Type I).
FlipChannel cosine_flip(int axis, double mu, double t_max = kDefaultFamilyHorizon);

// Flip channel with f(t) = (1 - e^{-2 gamma0 t}) / 2; off-axis eigenvalues
// decay as e^{-2 gamma0 t} and the channel is non-singular at any finite
// horizon.
FlipChannel semigroup_flip(int axis, double gamma0, double t_max = kDefaultFamilyHorizon);

// Flip channel with f = (1 - Lambda)/2. With require_confined, the kernel
// must stay in [0, 1] on the construction grid (rejected otherwise).
FlipChannel rtn_flip(int axis, const RTNParams& p, double t_max = kDefaultFamilyHorizon,
                     bool require_confined = false);

// Convex mixture of the three single-axis RTN flips with a common kernel:
// lambda_1 = 1 - (b+c)(1-Lambda) and cyclic.
PauliChannel isotropic_rtn(const RTNParams& p, const MixtureWeights& weights,
                           double t_max = kDefaultFamilyHorizon,
                           bool require_confined = false);

// Dephasing channel defined by its rate: lambda_off = exp(-2 int_0^t rate).
// The rate must be pole-free on [0, t_max]; for rates with poles use the
// tan/tan^2 constructors below, which carry the analytic accumulated
// integral across them.
PauliChannel rate_defined_dephasing(const TimeFunction& rate, int axis = 3,
                                    std::string label = {});

// Rate tan(omega t): lambda_off = |cos(omega t)|^{2/omega}; the map touches
// zero at each rate pole and recovers past it. Sign-flipping singularities.
PauliChannel tan_rate_dephasing(double omega, int axis = 3,
                                double t_max = kDefaultFamilyHorizon);

// Rate tan^2(omega t): lambda_off = exp(-2 (tan(omega t)/omega - t)) up to
// the first rate pole, where the accumulated integral diverges; beyond it
// the fully dephased value 0 is kept. Non-flipping singularities.
PauliChannel tan2_rate_dephasing(double omega, int axis = 3,
                                 double t_max = kDefaultFamilyHorizon);

// The rates themselves, with declared poles at odd multiples of
// pi/(2 omega).
TimeFunction tan_rate(double omega, double t_max);
TimeFunction tan2_rate(double omega, double t_max);

}  // namespace paulidyn
