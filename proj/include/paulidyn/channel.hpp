#pragma once

// Canonical representation of a qubit Pauli dynamical map by its three
// eigenvalue functions, with probability-vector, Choi, and Kraus views.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "paulidyn/numerics.hpp"

namespace paulidyn {

inline constexpr double kCpTolerance = 1e-10;

// Pauli weights (k0, k1, k2, k3) of the operator-sum form at one instant.
struct ProbabilityVector {
    double k0 = 1.0, k1 = 0.0, k2 = 0.0, k3 = 0.0;

    double sum() const { return k0 + k1 + k2 + k3; }
    double min_entry() const;
    std::array<double, 4> as_array() const { return {k0, k1, k2, k3}; }
};

// Bloch components of a qubit state; physical states have |r| <= 1.
struct BlochState {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;

    double norm() const;
};

struct LambdaTriple {
    double l1 = 1.0, l2 = 1.0, l3 = 1.0;

    double operator[](int axis) const;  // axis in {1,2,3}
};

LambdaTriple probs_to_lambdas(const ProbabilityVector& k);
ProbabilityVector lambdas_to_probs(double l1, double l2, double l3);
inline ProbabilityVector lambdas_to_probs(const LambdaTriple& l) {
    return lambdas_to_probs(l.l1, l.l2, l.l3);
}

// A Pauli channel: three eigenvalue functions of time, all equal to 1 at
// t = 0. Immutable once built; families may attach analytic log-derivatives
// (d/dt ln lambda_j) and an analytically known zero set before handing the
// channel out.
class PauliChannel {
public:
    struct DeclaredZero {
        double t = 0.0;
        std::array<bool, 3> vanishing = {false, false, false};
    };

    PauliChannel(TimeFunction l1, TimeFunction l2, TimeFunction l3, std::string label)
        : lambda_{std::move(l1), std::move(l2), std::move(l3)}, label_(std::move(label)) {}

    const TimeFunction& lambda(int axis) const { return lambda_[index(axis)]; }

    LambdaTriple lambdas(double t) const {
        return {lambda_[0](t), lambda_[1](t), lambda_[2](t)};
    }

    double t_max() const { return lambda_[0].t_max(); }
    const std::string& label() const { return label_; }

    void set_log_derivative(int axis, std::function<double(double)> ld) {
        log_derivative_[index(axis)] = std::move(ld);
    }
    bool has_log_derivative(int axis) const {
        return static_cast<bool>(log_derivative_[index(axis)]);
    }
    double log_derivative(int axis, double t) const {
        return log_derivative_[index(axis)](t);
    }

    void declare_zeros(std::vector<DeclaredZero> zeros) {
        declared_zeros_ = std::move(zeros);
        zeros_declared_ = true;
    }
    bool zeros_declared() const { return zeros_declared_; }
    const std::vector<DeclaredZero>& declared_zeros() const { return declared_zeros_; }

private:
    static int index(int axis);

    std::array<TimeFunction, 3> lambda_;
    std::array<std::function<double(double)>, 3> log_derivative_;
    std::vector<DeclaredZero> declared_zeros_;
    bool zeros_declared_ = false;
    std::string label_;
};

PauliChannel identity_channel(double t_max);

// Complete positivity at time t: all Pauli weights nonnegative within
// eps_cp. The vector is returned for diagnostics either way.
std::pair<bool, ProbabilityVector> is_cp(const PauliChannel& ch, double t,
                                         double eps_cp = kCpTolerance);

// Choi matrix built from the normalized maximally entangled state; trace 1,
// eigenvalues equal to the Pauli weights.
Eigen::Matrix4cd choi_matrix(const PauliChannel& ch, double t);

// Componentwise action on the Bloch vector: r_j -> lambda_j(t) r_j.
BlochState apply(const PauliChannel& ch, const BlochState& s, double t);

// Kraus operators {sqrt(k_i) sigma_i}, dropping zero-weight terms.
// Throws NotCompletelyPositiveError when the map is not CP at t.
std::vector<Eigen::Matrix2cd> kraus_operators(const PauliChannel& ch, double t);

// The four Pauli matrices, sigma_0 = I.
const std::array<Eigen::Matrix2cd, 4>& pauli_matrices();

}  // namespace paulidyn
