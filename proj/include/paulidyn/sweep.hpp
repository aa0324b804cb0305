#pragma once

// CSV sweep output: t, eigenvalues, Pauli weights, and decay rates, with
// rate cells left empty inside pole-excision windows.

#include <iosfwd>
#include <string>

#include "paulidyn/generator.hpp"

namespace paulidyn {

inline constexpr const char* kSweepHeader =
    "t,lambda1,lambda2,lambda3,k0,k1,k2,k3,gamma1,gamma2,gamma3";

// Formats with 12 significant digits ("%.12g"), locale-independent.
std::string format_cell(double value);

// Writes `rows` samples of the channel on [0, horizon] inclusive. Throws
// std::runtime_error on non-finite eigenvalues or weights.
void write_sweep_csv(std::ostream& out, const PauliChannel& ch, const DecayRates& rates,
                     double horizon, int rows);

// Simple SVG line plot of the three eigenvalues over [0, horizon].
void write_lambda_svg(std::ostream& out, const PauliChannel& ch, double horizon,
                      int samples = 600);

}  // namespace paulidyn
