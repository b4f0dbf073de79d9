#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eslc/model.hpp"

namespace eslc {

/// Everything one scenario run needs: the system, the dispersion, the pulse
/// discretization, the training settings and the test protocol. Serialized
/// as a flat key = value file; every field maps to exactly one key.
struct ScenarioConfig {
    ModelKind model = ModelKind::TwoLevelTwoControl;

    double omega_dispersion = 0.2;  // Omega
    double theta_dispersion = 0.2;  // Theta
    int omega_samples = 5;          // N_Omega (odd)
    int theta_samples = 5;          // N_Theta (odd)

    double horizon = 2.0;  // T
    int slices = 200;      // Q

    double learning_rate = 0.2;  // eta
    double epsilon = 5e-5;
    int max_iterations = 50000;

    std::string initial_control = "sin";  // named waveform or a CSV path
    int test_count = 300;
    std::uint64_t seed = 42;

    std::string preset;  // provenance; empty when assembled by hand

    void validate() const;
};

/// Names of the built-in scenario presets.
std::vector<std::string> preset_names();

/// The preset's baked configuration. Throws ConfigError for unknown names.
ScenarioConfig preset_config(std::string_view name);

/// Parses a flat key = value file ('#' starts a comment). Unknown keys and
/// unparsable values throw ConfigError. Fields not named keep their values
/// from `base`, so a file can partially override a preset.
ScenarioConfig parse_config_file(const std::filesystem::path& path,
                                 const ScenarioConfig& base);

/// Canonical key = value serialization (fixed key order, round-trip exact).
std::string serialize_config(const ScenarioConfig& config);

/// Stable 64-bit identifier of a run: FNV-1a over the command name and the
/// canonical config serialization. Excludes anything execution-specific
/// (thread count, output directory), so outputs are reproducible byte for
/// byte across machines and thread counts.
std::string run_identifier(std::string_view command, const ScenarioConfig& config);

}  // namespace eslc
