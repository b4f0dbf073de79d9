#pragma once

#include <cstdint>

#include "eslc/objective.hpp"

namespace eslc {

/// Settings for the gradient-flow training loop.
struct TrainConfig {
    double learning_rate = 0.2;   // eta, fixed across iterations
    double epsilon = 5e-5;        // stop once J_N > 1 - epsilon
    int max_iterations = 50000;   // update-step cap; hitting it is not an error
    ControlField initial_control;
    bool halve_step_on_nan = false;  // off in the reproduction presets
    int threads = 1;

    void validate() const;
};

struct ConvergencePoint {
    int iteration = 0;
    double j_value = 0.0;
};

struct TrainResult {
    ControlField learned_control;
    std::vector<ConvergencePoint> convergence_log;  // J_N(u^k) for k = 0..
    bool converged = false;
    int iterations_used = 0;  // gradient updates applied
};

/// Iterates u <- u + eta * delta over the training grid until
/// J_N > 1 - epsilon or the iteration cap. Deterministic for fixed inputs,
/// independent of the thread count.
TrainResult train(const SystemModel& model, std::span<const MemberParams> grid,
                  const TrainConfig& config);

/// Fidelity statistics of one control over a set of members.
struct TestReport {
    std::vector<MemberParams> members;
    std::vector<double> fidelities;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::uint64_t seed = 0;  // provenance of the member draw
};

TestReport evaluate(const SystemModel& model, const ControlField& control,
                    std::span<const MemberParams> members, std::uint64_t seed = 0,
                    int threads = 1);

}  // namespace eslc
