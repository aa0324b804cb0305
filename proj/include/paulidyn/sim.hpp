#pragma once

// Master-equation round trip: integrate the canonical Pauli generator with
// fixed-step RK4 and compare the trajectory with the closed-form map.

#include <utility>
#include <vector>

#include "paulidyn/generator.hpp"

namespace paulidyn {

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<BlochState> states;
    std::array<std::vector<double>, 3> lambda_traces;  // filled by the channel overload
    std::vector<std::pair<double, double>> excised_windows;
};

// Bloch components evolve independently: dr_j/dt = -2 (sum of the other two
// rates) r_j. Throws PoleInRangeError when a rate pole lies in [0, horizon];
// use the channel overload for automatic pole excision.
TrajectoryRecord evolve(const DecayRates& rates, const BlochState& s0, double horizon,
                        double dt);

// Integrates between rate poles; around each pole the window
// [t* - 10 dt, t* + 10 dt] is excised and the trajectory restarts from the
// closed-form map value at the right edge.
TrajectoryRecord evolve(const PauliChannel& ch, const BlochState& s0, double horizon,
                        double dt);

// Max over the trajectory grid and the three axis-aligned initial states of
// |r_sim(t) - lambda_j(t) r_j(0)|.
double roundtrip_error(const PauliChannel& ch, double horizon, double dt);

}  // namespace paulidyn
