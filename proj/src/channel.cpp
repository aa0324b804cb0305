#include "paulidyn/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace paulidyn {

namespace {
constexpr double kKrausDropTol = 1e-14;
}

double ProbabilityVector::min_entry() const {
    return std::min(std::min(k0, k1), std::min(k2, k3));
}

double BlochState::norm() const {
    return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3);
}

double LambdaTriple::operator[](int axis) const {
    switch (axis) {
        case 1: return l1;
        case 2: return l2;
        case 3: return l3;
        default: throw std::out_of_range("LambdaTriple: axis must be 1, 2 or 3");
    }
}

int PauliChannel::index(int axis) {
    if (axis < 1 || axis > 3) throw std::out_of_range("PauliChannel: axis must be 1, 2 or 3");
    return axis - 1;
}

LambdaTriple probs_to_lambdas(const ProbabilityVector& k) {
    return {k.k0 + k.k1 - k.k2 - k.k3,
            k.k0 - k.k1 + k.k2 - k.k3,
            k.k0 - k.k1 - k.k2 + k.k3};
}

ProbabilityVector lambdas_to_probs(double l1, double l2, double l3) {
    return {0.25 * (1.0 + l1 + l2 + l3),
            0.25 * (1.0 + l1 - l2 - l3),
            0.25 * (1.0 - l1 + l2 - l3),
            0.25 * (1.0 - l1 - l2 + l3)};
}

PauliChannel identity_channel(double t_max) {
    auto one = [](double) { return 1.0; };
    auto zero = [](double) { return 0.0; };
    TimeFunction unit(one, zero, t_max);
    PauliChannel ch(unit, unit, unit, "identity");
    for (int axis = 1; axis <= 3; ++axis) ch.set_log_derivative(axis, zero);
    return ch;
}

std::pair<bool, ProbabilityVector> is_cp(const PauliChannel& ch, double t, double eps_cp) {
    const ProbabilityVector k = lambdas_to_probs(ch.lambdas(t));
    return {k.min_entry() >= -eps_cp, k};
}

const std::array<Eigen::Matrix2cd, 4>& pauli_matrices() {
    using namespace std::complex_literals;
    static const std::array<Eigen::Matrix2cd, 4> sigmas = [] {
        std::array<Eigen::Matrix2cd, 4> s;
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, -1i, 1i, 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    return sigmas;
}

Eigen::Matrix4cd choi_matrix(const PauliChannel& ch, double t) {
    const ProbabilityVector k = lambdas_to_probs(ch.lambdas(t));
    const auto& sigma = pauli_matrices();

    // Normalized Bell state (|00> + |11>) / sqrt(2).
    Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);

    Eigen::Matrix4cd chi = Eigen::Matrix4cd::Zero();
    const std::array<double, 4> weights = k.as_array();
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix4cd op = Eigen::Matrix4cd::Zero();
        op.block<2, 2>(0, 0) = sigma[i](0, 0) * Eigen::Matrix2cd::Identity();
        op.block<2, 2>(0, 2) = sigma[i](0, 1) * Eigen::Matrix2cd::Identity();
        op.block<2, 2>(2, 0) = sigma[i](1, 0) * Eigen::Matrix2cd::Identity();
        op.block<2, 2>(2, 2) = sigma[i](1, 1) * Eigen::Matrix2cd::Identity();
        const Eigen::Vector4cd v = op * bell;
        chi += weights[i] * (v * v.adjoint());
    }
    return chi;
}

BlochState apply(const PauliChannel& ch, const BlochState& s, double t) {
    const LambdaTriple l = ch.lambdas(t);
    return {l.l1 * s.r1, l.l2 * s.r2, l.l3 * s.r3};
}

std::vector<Eigen::Matrix2cd> kraus_operators(const PauliChannel& ch, double t) {
    const auto [cp, k] = is_cp(ch, t);
    if (!cp) {
        throw NotCompletelyPositiveError(
            "kraus_operators: map is not CP at t = " + std::to_string(t) +
            " (min weight " + std::to_string(k.min_entry()) + ")");
    }
    const auto& sigma = pauli_matrices();
    const std::array<double, 4> weights = k.as_array();
    std::vector<Eigen::Matrix2cd> ops;
    for (int i = 0; i < 4; ++i) {
        if (weights[i] > kKrausDropTol) {
            ops.push_back(std::sqrt(weights[i]) * sigma[i]);
        }
    }
    return ops;
}

}  // namespace paulidyn
