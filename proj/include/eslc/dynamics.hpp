#pragma once

#include <functional>
#include <vector>

#include "eslc/model.hpp"

namespace eslc {

/// A piecewise-constant multi-channel pulse on [0, T]. Slice q (1-based)
/// covers (t_{q-1}, t_q] with t_q = q T / Q; values are stored row-major,
/// one row per slice.
struct ControlField {
    double horizon = 0.0;   // T
    int slice_count = 0;    // Q
    int channel_count = 0;  // M
    std::vector<double> values;

    ControlField() = default;
    ControlField(double horizon, int slice_count, int channel_count);

    /// Samples u_m(t) = waveform(t) at each slice's right endpoint t_q,
    /// the same value on every channel.
    static ControlField from_waveform(double horizon, int slice_count,
                                      int channel_count,
                                      const std::function<double(double)>& waveform);

    double dt() const { return horizon / slice_count; }
    double& at(int slice, int channel) { return values[static_cast<std::size_t>(slice) * channel_count + channel]; }
    double at(int slice, int channel) const { return values[static_cast<std::size_t>(slice) * channel_count + channel]; }

    /// Throws ValidationError on nonpositive shape or nonfinite entries.
    void validate() const;
};

/// Per-slice states and cumulative propagators of one member under one pulse.
/// states[q] = U(t_q) psi_0 and propagators[q] = U(t_q), q = 0..Q, U(t_0) = I.
struct Trajectory {
    std::vector<StateVector> states;
    std::vector<ComplexMatrix> propagators;
};

/// Evolves one member under a piecewise-constant pulse by exact
/// exponentiation of each slice generator:
///   U(t_q) = exp(G_q dt) ... exp(G_1 dt).
Trajectory propagate(const SystemModel& model, const MemberParams& member,
                     const ControlField& control);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Pauli expectation values (x, y, z) of a normalized two-level state.
BlochVector bloch_coordinates(const StateVector& psi);

}  // namespace eslc
