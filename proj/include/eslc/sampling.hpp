#pragma once

#include <cstdint>
#include <vector>

#include "eslc/model.hpp"

namespace eslc {

/// Dispersion bounds and deterministic sample counts for the training grid.
/// omega ranges over [1 - omega_spread, 1 + omega_spread], theta likewise.
struct DispersionSpec {
    double omega_spread = 0.0;  // Omega, in [0, 1]
    double theta_spread = 0.0;  // Theta, in [0, 1]
    int omega_count = 1;        // N_Omega, positive odd
    int theta_count = 1;        // N_Theta, positive odd

    void validate() const;
};

/// All omega_count * theta_count combinations of
///   omega_n = 1 - Omega + (2n - 1) Omega / N_Omega,   n = 1..N_Omega
/// (theta analogous), row-major with omega as the outer index.
std::vector<MemberParams> build_training_grid(const DispersionSpec& spec);

/// `count` members drawn i.i.d. uniform from the dispersion rectangle.
/// Uses std::mt19937_64 with a fixed 53-bit mapping to [0,1), so identical
/// seeds give identical sequences on every platform. Per member, omega is
/// drawn before theta.
std::vector<MemberParams> sample_test_members(double omega_spread,
                                              double theta_spread, int count,
                                              std::uint64_t seed);

}  // namespace eslc
