#include "eslc/slc.hpp"

#include <algorithm>
#include <cmath>

#include "eslc/parallel.hpp"

namespace eslc {

namespace {

bool all_finite(const std::vector<double>& values) {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

}  // namespace

void TrainConfig::validate() const {
    if (!std::isfinite(learning_rate) || learning_rate < 0.0) {
        throw ValidationError("learning_rate must be finite and >= 0");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("epsilon must lie in (0, 1)");
    }
    if (max_iterations < 0) {
        throw ValidationError("max_iterations must be >= 0");
    }
    if (threads < 1) {
        throw ValidationError("threads must be >= 1");
    }
    initial_control.validate();
}

TrainResult train(const SystemModel& model, std::span<const MemberParams> grid,
                  const TrainConfig& config) {
    config.validate();
    if (grid.empty()) {
        throw ValidationError("train: the training grid is empty");
    }

    TrainResult result;
    result.learned_control = config.initial_control;
    ControlField& u = result.learned_control;

    double eta = config.learning_rate;
    int halvings = 0;
    constexpr int kMaxHalvings = 60;
    ControlField previous = u;  // restore point for the NaN fallback

    for (int k = 0;; ++k) {
        const ObjectiveEval eval =
            evaluate_objective(model, grid, u, config.threads);

        const bool bad = !std::isfinite(eval.performance) ||
                         !all_finite(eval.gradient.values);
        if (bad) {
            if (config.halve_step_on_nan && halvings < kMaxHalvings && k > 0) {
                // Retreat to the last good control and try a smaller step.
                ++halvings;
                eta *= 0.5;
                u = previous;
                const GradientArray retry =
                    evaluate_objective(model, grid, u, config.threads).gradient;
                for (std::size_t i = 0; i < u.values.size(); ++i) {
                    u.values[i] += eta * retry.values[i];
                }
                --k;  // redo this iteration index with the shorter step
                continue;
            }
            throw NumericalError("train: NaN in J_N or gradient", k);
        }

        result.convergence_log.push_back({k, eval.performance});
        result.iterations_used = k;
        if (eval.performance > 1.0 - config.epsilon) {
            result.converged = true;
            return result;
        }
        if (k == config.max_iterations) {
            result.converged = false;
            return result;
        }

        previous = u;
        for (std::size_t i = 0; i < u.values.size(); ++i) {
            u.values[i] += eta * eval.gradient.values[i];
        }
        if (!all_finite(u.values)) {
            throw NumericalError("train: control became nonfinite after update", k);
        }
    }
}

TestReport evaluate(const SystemModel& model, const ControlField& control,
                    std::span<const MemberParams> members, std::uint64_t seed,
                    int threads) {
    if (members.empty()) {
        throw ValidationError("evaluate: the member list is empty");
    }
    TestReport report;
    report.seed = seed;
    report.members.assign(members.begin(), members.end());
    report.fidelities.resize(members.size());
    parallel_for(static_cast<int>(members.size()), threads, [&](int i) {
        const Trajectory traj = propagate(model, members[i], control);
        report.fidelities[i] = fidelity(traj.states.back(), model.target_state);
    });

    double sum = 0.0;
    report.min = report.fidelities.front();
    report.max = report.fidelities.front();
    for (double f : report.fidelities) {  // fixed member order
        sum += f;
        report.min = std::min(report.min, f);
        report.max = std::max(report.max, f);
    }
    report.mean = sum / static_cast<double>(report.fidelities.size());
    return report;
}

}  // namespace eslc
