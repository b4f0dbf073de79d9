#include "eslc/dynamics.hpp"

#include <cmath>
#include <span>

namespace eslc {

ControlField::ControlField(double horizon, int slice_count, int channel_count)
    : horizon(horizon),
      slice_count(slice_count),
      channel_count(channel_count),
      values(static_cast<std::size_t>(slice_count) * channel_count, 0.0) {}

ControlField ControlField::from_waveform(double horizon, int slice_count,
                                         int channel_count,
                                         const std::function<double(double)>& waveform) {
    ControlField field(horizon, slice_count, channel_count);
    const double dt = field.dt();
    for (int q = 0; q < slice_count; ++q) {
        const double value = waveform((q + 1) * dt);
        for (int m = 0; m < channel_count; ++m) {
            field.at(q, m) = value;
        }
    }
    return field;
}

void ControlField::validate() const {
    if (!(horizon > 0.0) || slice_count < 1 || channel_count < 1) {
        throw ValidationError("control field: need horizon > 0, slices >= 1, "
                              "channels >= 1");
    }
    if (values.size() != static_cast<std::size_t>(slice_count) * channel_count) {
        throw ValidationError("control field: value array has " +
                              std::to_string(values.size()) + " entries, expected " +
                              std::to_string(slice_count * channel_count));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("control field: nonfinite value");
        }
    }
}

Trajectory propagate(const SystemModel& model, const MemberParams& member,
                     const ControlField& control) {
    if (control.channel_count != model.channel_count) {
        throw DimensionError("propagate: control has " +
                             std::to_string(control.channel_count) +
                             " channels, model expects " +
                             std::to_string(model.channel_count));
    }
    control.validate();

    const int q_count = control.slice_count;
    const double dt = control.dt();
    Trajectory traj;
    traj.states.reserve(q_count + 1);
    traj.propagators.reserve(q_count + 1);
    traj.states.push_back(model.initial_state);
    traj.propagators.push_back(ComplexMatrix::Identity(model.dim, model.dim));

    for (int q = 0; q < q_count; ++q) {
        std::span<const double> u_slice(
            control.values.data() + static_cast<std::size_t>(q) * control.channel_count,
            static_cast<std::size_t>(control.channel_count));
        const ComplexMatrix step = mat_exp(generator(model, member, u_slice) * dt);
        traj.propagators.push_back(step * traj.propagators.back());
        traj.states.push_back(step * traj.states.back());
    }
    return traj;
}

BlochVector bloch_coordinates(const StateVector& psi) {
    if (psi.size() != 2) {
        throw DimensionError("bloch_coordinates: need a two-level state, got dim " +
                             std::to_string(psi.size()));
    }
    const Complex cross = std::conj(psi(0)) * psi(1);
    BlochVector r;
    r.x = 2.0 * cross.real();
    r.y = 2.0 * cross.imag();
    r.z = std::norm(psi(0)) - std::norm(psi(1));
    return r;
}

}  // namespace eslc
