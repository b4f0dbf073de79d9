#pragma once

#include <span>

#include "eslc/dynamics.hpp"

namespace eslc {

/// The ensemble-averaged gradient of J_N with respect to the control values,
/// one entry per (slice, channel).
struct GradientArray {
    int slice_count = 0;
    int channel_count = 0;
    int sample_count = 0;  // N the array was averaged over
    std::vector<double> values;

    GradientArray() = default;
    GradientArray(int slice_count, int channel_count);

    double& at(int slice, int channel) { return values[static_cast<std::size_t>(slice) * channel_count + channel]; }
    double at(int slice, int channel) const { return values[static_cast<std::size_t>(slice) * channel_count + channel]; }
};

/// F = |<psi|phi>|, the state-transfer fidelity. Phase-invariant.
double fidelity(const StateVector& psi, const StateVector& phi);

/// J_N = (1/N) sum_n |<psi_n(T)|target>|^2 over the given members.
double performance(const SystemModel& model, std::span<const MemberParams> members,
                   const ControlField& control, int threads = 1);

/// Ensemble-averaged ascent direction
///   delta[q][m] = (1/N) sum_n 2 Im( <psi_n(T)|target> <target|A_mn(t_{q-1})|psi_0> )
/// with A_mn(t) = U_n(T) U_n'(t) theta_n H_m U_n(t), evaluated at each slice's
/// left endpoint. H_m are the effective control operators of the model, so the
/// direction differentiates the dynamics propagate() actually integrates
/// (first order in dt). Members are accumulated in index order.
GradientArray gradient(const SystemModel& model, std::span<const MemberParams> members,
                       const ControlField& control, int threads = 1);

/// One propagation pass per member yielding both J_N and the gradient.
struct ObjectiveEval {
    double performance = 0.0;
    GradientArray gradient;
};

ObjectiveEval evaluate_objective(const SystemModel& model,
                                 std::span<const MemberParams> members,
                                 const ControlField& control, int threads = 1);

}  // namespace eslc
