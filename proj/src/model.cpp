#include "eslc/model.hpp"

#include <cmath>

namespace eslc {

namespace {

const Complex kI(0.0, 1.0);

void require_channels(const SystemModel& model, std::span<const double> u) {
    if (static_cast<int>(u.size()) != model.channel_count) {
        throw DimensionError("generator: model '" +
                             std::string(model_kind_name(model.kind)) + "' expects " +
                             std::to_string(model.channel_count) + " channels, got " +
                             std::to_string(u.size()));
    }
}

}  // namespace

ModelKind model_kind_from_name(std::string_view name) {
    if (name == "two-level-two-control") return ModelKind::TwoLevelTwoControl;
    if (name == "two-level-single-control") return ModelKind::TwoLevelSingleControl;
    if (name == "lambda-three-level") return ModelKind::LambdaThreeLevel;
    throw ConfigError("unknown model kind '" + std::string(name) + "'");
}

std::string_view model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::TwoLevelTwoControl: return "two-level-two-control";
        case ModelKind::TwoLevelSingleControl: return "two-level-single-control";
        case ModelKind::LambdaThreeLevel: return "lambda-three-level";
    }
    throw ConfigError("unknown model kind enum value");
}

SystemModel make_model(ModelKind kind) {
    SystemModel m;
    m.kind = kind;
    switch (kind) {
        case ModelKind::TwoLevelTwoControl:
        case ModelKind::TwoLevelSingleControl: {
            m.dim = 2;
            m.channel_count = kind == ModelKind::TwoLevelTwoControl ? 2 : 1;
            m.drift = ComplexMatrix::Zero(2, 2);  // H0 = sigma_z / 2
            m.drift(0, 0) = 0.5;
            m.drift(1, 1) = -0.5;
            m.initial_state = StateVector::Zero(2);
            m.initial_state(0) = 1.0;  // |0>
            m.target_state = StateVector::Zero(2);
            m.target_state(1) = 1.0;  // |1>
            if (kind == ModelKind::TwoLevelTwoControl) {
                ComplexMatrix hx = ComplexMatrix::Zero(2, 2);  // sigma_x / 2
                hx(0, 1) = 0.5;
                hx(1, 0) = 0.5;
                ComplexMatrix hy = ComplexMatrix::Zero(2, 2);  // sigma_y / 2
                hy(0, 1) = Complex(0, -0.5);
                hy(1, 0) = Complex(0, 0.5);
                m.controls = {hx, hy};
            } else {
                // The single shared drive couples through both axes at once;
                // store the operator the amplitude equation responds to.
                m.controls = {};
            }
            break;
        }
        case ModelKind::LambdaThreeLevel: {
            m.dim = 3;
            m.channel_count = 2;
            m.drift = ComplexMatrix::Zero(3, 3);
            m.drift(0, 0) = 1.5;
            m.drift(1, 1) = 1.0;
            m.drift(2, 2) = 0.0;
            ComplexMatrix h1 = ComplexMatrix::Zero(3, 3);
            h1(1, 2) = 1.0;
            h1(2, 1) = 1.0;
            ComplexMatrix h2 = ComplexMatrix::Zero(3, 3);
            h2(0, 2) = 1.0;
            h2(2, 0) = 1.0;
            m.controls = {h1, h2};
            m.initial_state = StateVector::Constant(3, Complex(1.0 / std::sqrt(3.0), 0.0));
            m.target_state = StateVector::Zero(3);
            m.target_state(2) = 1.0;
            break;
        }
    }
    if (m.dim == 0) throw ConfigError("make_model: unknown model kind");
    if (m.kind == ModelKind::TwoLevelSingleControl) {
        m.controls = effective_control_operators(m);
    }
    return m;
}

ComplexMatrix generator(const SystemModel& model, const MemberParams& member,
                        std::span<const double> u) {
    require_channels(model, u);
    const double w = member.omega;
    const double th = member.theta;
    switch (model.kind) {
        case ModelKind::TwoLevelTwoControl: {
            // dC/dt = [[0.5 w i, th f], [-th f*, -0.5 w i]] C, f = u2 - 0.5i u1
            const Complex f(u[1], -0.5 * u[0]);
            ComplexMatrix g(2, 2);
            g(0, 0) = Complex(0, 0.5 * w);
            g(0, 1) = th * f;
            g(1, 0) = -th * std::conj(f);
            g(1, 1) = Complex(0, -0.5 * w);
            return g;
        }
        case ModelKind::TwoLevelSingleControl: {
            // same shape with f replaced by h = u (1 - 0.5i)
            const Complex h(u[0], -0.5 * u[0]);
            ComplexMatrix g(2, 2);
            g(0, 0) = Complex(0, 0.5 * w);
            g(0, 1) = th * h;
            g(1, 0) = -th * std::conj(h);
            g(1, 1) = Complex(0, -0.5 * w);
            return g;
        }
        case ModelKind::LambdaThreeLevel: {
            ComplexMatrix g = ComplexMatrix::Zero(3, 3);
            g(0, 0) = Complex(0, -1.5 * w);
            g(1, 1) = Complex(0, -w);
            g(0, 2) = -kI * th * u[1];
            g(1, 2) = -kI * th * u[0];
            g(2, 0) = -kI * th * u[1];
            g(2, 1) = -kI * th * u[0];
            return g;
        }
    }
    throw ConfigError("generator: unknown model kind");
}

std::vector<ComplexMatrix> effective_control_operators(const SystemModel& model) {
    // G is affine in u, so dG/du_m is the difference of G at the unit vector
    // e_m and at zero (theta = 1); H_m = i dG/du_m.
    const MemberParams unit{1.0, 1.0};
    std::vector<double> zeros(model.channel_count, 0.0);
    const ComplexMatrix base = generator(model, unit, zeros);
    std::vector<ComplexMatrix> ops;
    ops.reserve(model.channel_count);
    for (int m = 0; m < model.channel_count; ++m) {
        std::vector<double> e(model.channel_count, 0.0);
        e[m] = 1.0;
        ops.push_back(kI * (generator(model, unit, e) - base));
    }
    return ops;
}

}  // namespace eslc
