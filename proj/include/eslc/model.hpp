#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "eslc/linalg.hpp"

namespace eslc {

/// The three built-in systems.
enum class ModelKind {
    TwoLevelTwoControl,     // spin with independent x/y drives
    TwoLevelSingleControl,  // spin with one shared drive on both axes
    LambdaThreeLevel,       // lambda atom, two lower levels coupled to one upper
};

ModelKind model_kind_from_name(std::string_view name);
std::string_view model_kind_name(ModelKind kind);

/// A closed system plus the state-transfer task: drift and control operators
/// (Hermitian, hbar = 1), initial and target states (normalized).
struct SystemModel {
    ModelKind kind;
    int dim = 0;
    int channel_count = 0;
    ComplexMatrix drift;                   // H_0
    std::vector<ComplexMatrix> controls;   // H_m
    StateVector initial_state;
    StateVector target_state;
};

/// One ensemble member's inhomogeneity: omega scales the drift, theta scales
/// every control channel. Both are constant over the whole horizon.
struct MemberParams {
    double omega = 1.0;
    double theta = 1.0;
};

SystemModel make_model(ModelKind kind);

/// The skew-Hermitian generator G of d/dt C = G C for one member and one
/// control slice. The two-level kinds use their amplitude-equation forms
/// directly; the lambda kind is equivalent to -i(omega H0 + theta sum u_m H_m).
ComplexMatrix generator(const SystemModel& model, const MemberParams& member,
                        std::span<const double> u_slice);

/// The Hermitian operators H_m with dG/du_m = -i theta H_m, i.e. the control
/// operators the integrated dynamics actually respond to. For the lambda
/// model these coincide with model.controls; for the two-level kinds they
/// differ from the textbook sigma/2 set (see generator).
std::vector<ComplexMatrix> effective_control_operators(const SystemModel& model);

}  // namespace eslc
