#include "eslc/sampling.hpp"

#include <random>

namespace eslc {

namespace {

void require_spread(double spread, const char* name) {
    if (!(spread >= 0.0 && spread <= 1.0)) {
        throw ConfigError(std::string(name) + " must lie in [0, 1], got " +
                          std::to_string(spread));
    }
}

void require_odd_count(int count, const char* name) {
    if (count < 1 || count % 2 == 0) {
        throw ConfigError(std::string(name) + " must be a positive odd integer, got " +
                          std::to_string(count));
    }
}

// Top 53 bits of the generator output, mapped to [0, 1).
double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> grid_axis(double spread, int count) {
    std::vector<double> values(count);
    for (int n = 1; n <= count; ++n) {
        values[n - 1] = 1.0 - spread + (2.0 * n - 1.0) * spread / count;
    }
    return values;
}

}  // namespace

void DispersionSpec::validate() const {
    require_spread(omega_spread, "omega_spread");
    require_spread(theta_spread, "theta_spread");
    require_odd_count(omega_count, "omega_count");
    require_odd_count(theta_count, "theta_count");
}

std::vector<MemberParams> build_training_grid(const DispersionSpec& spec) {
    spec.validate();
    const std::vector<double> omegas = grid_axis(spec.omega_spread, spec.omega_count);
    const std::vector<double> thetas = grid_axis(spec.theta_spread, spec.theta_count);
    std::vector<MemberParams> grid;
    grid.reserve(omegas.size() * thetas.size());
    for (double w : omegas) {
        for (double th : thetas) {
            grid.push_back({w, th});
        }
    }
    return grid;
}

std::vector<MemberParams> sample_test_members(double omega_spread,
                                              double theta_spread, int count,
                                              std::uint64_t seed) {
    require_spread(omega_spread, "omega_spread");
    require_spread(theta_spread, "theta_spread");
    if (count < 1) {
        throw ConfigError("test member count must be >= 1, got " +
                          std::to_string(count));
    }
    std::mt19937_64 rng(seed);
    std::vector<MemberParams> members;
    members.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double w = 1.0 - omega_spread + 2.0 * omega_spread * canonical_unit(rng);
        const double th = 1.0 - theta_spread + 2.0 * theta_spread * canonical_unit(rng);
        members.push_back({w, th});
    }
    return members;
}

}  // namespace eslc
