#include "eslc/objective.hpp"

#include <cmath>

#include "eslc/parallel.hpp"

namespace eslc {

namespace {

struct MemberEval {
    double j_term = 0.0;
    std::vector<double> grad;  // Q*M, empty unless requested
};

// Propagates one member and, if requested, assembles its gradient block from
// the cached cumulative propagators.
MemberEval eval_member(const SystemModel& model,
                       std::span<const ComplexMatrix> effective_ops,
                       const MemberParams& member, const ControlField& control,
                       bool want_grad) {
    const Trajectory traj = propagate(model, member, control);
    const int q_count = control.slice_count;
    const int m_count = control.channel_count;

    const StateVector& psi_final = traj.states[q_count];
    const Complex overlap = inner_product(psi_final, model.target_state);

    MemberEval out;
    out.j_term = std::norm(overlap);
    if (!want_grad) return out;

    // <target| U_T U_q' theta H_m U_q |psi0> = theta * (U_q w)' H_m (U_q psi0)
    // with w = U_T' target; U_q psi0 is the cached state at the slice's left
    // endpoint.
    const StateVector back = traj.propagators[q_count].adjoint() * model.target_state;
    out.grad.resize(static_cast<std::size_t>(q_count) * m_count);
    for (int q = 0; q < q_count; ++q) {
        const StateVector chi = traj.propagators[q] * back;
        const StateVector& psi_q = traj.states[q];
        for (int m = 0; m < m_count; ++m) {
            const Complex sensitivity = chi.dot(effective_ops[m] * psi_q);
            out.grad[static_cast<std::size_t>(q) * m_count + m] =
                2.0 * std::imag(overlap * member.theta * sensitivity);
        }
    }
    return out;
}

std::vector<MemberEval> eval_members(const SystemModel& model,
                                     std::span<const MemberParams> members,
                                     const ControlField& control, bool want_grad,
                                     int threads) {
    if (members.empty()) {
        throw ValidationError("ensemble evaluation needs at least one member");
    }
    const std::vector<ComplexMatrix> effective_ops =
        want_grad ? effective_control_operators(model) : std::vector<ComplexMatrix>{};
    std::vector<MemberEval> evals(members.size());
    parallel_for(static_cast<int>(members.size()), threads, [&](int i) {
        evals[i] = eval_member(model, effective_ops, members[i], control, want_grad);
    });
    return evals;
}

}  // namespace

GradientArray::GradientArray(int slice_count, int channel_count)
    : slice_count(slice_count),
      channel_count(channel_count),
      values(static_cast<std::size_t>(slice_count) * channel_count, 0.0) {}

double fidelity(const StateVector& psi, const StateVector& phi) {
    return std::abs(inner_product(psi, phi));
}

double performance(const SystemModel& model, std::span<const MemberParams> members,
                   const ControlField& control, int threads) {
    const auto evals = eval_members(model, members, control, false, threads);
    double sum = 0.0;
    for (const auto& e : evals) sum += e.j_term;  // fixed member order
    return sum / static_cast<double>(evals.size());
}

GradientArray gradient(const SystemModel& model, std::span<const MemberParams> members,
                       const ControlField& control, int threads) {
    return evaluate_objective(model, members, control, threads).gradient;
}

ObjectiveEval evaluate_objective(const SystemModel& model,
                                 std::span<const MemberParams> members,
                                 const ControlField& control, int threads) {
    const auto evals = eval_members(model, members, control, true, threads);
    const double inv_n = 1.0 / static_cast<double>(evals.size());

    ObjectiveEval out;
    out.gradient = GradientArray(control.slice_count, control.channel_count);
    out.gradient.sample_count = static_cast<int>(evals.size());
    double j_sum = 0.0;
    for (const auto& e : evals) {  // fixed member order
        j_sum += e.j_term;
        for (std::size_t i = 0; i < e.grad.size(); ++i) {
            out.gradient.values[i] += e.grad[i];
        }
    }
    for (double& v : out.gradient.values) v *= inv_n;
    out.performance = j_sum * inv_n;
    return out;
}

}  // namespace eslc
