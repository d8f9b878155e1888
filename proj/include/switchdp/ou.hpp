#pragma once

#include <cstdint>
#include <vector>

namespace switchdp {

/// Ornstein-Uhlenbeck parameters for the centered noise dZ = -a Z dt + sigma dW.
/// a >= 0 and sigma >= 0; sigma = 0 degenerates to deterministic decay, which the
/// test oracles rely on.
struct OuParams {
  double reversion = 0.0;   // a, 1/hour
  double volatility = 0.0;  // sigma, signal-units per sqrt(hour)
  double initial = 0.0;     // z0, signal-units
};

/// One-step conditional mean factor e^{-a dt}.
double ou_decay(const OuParams& ou, double dt);

/// One-step conditional variance sigma^2 (1 - e^{-2 a dt}) / (2a); sigma^2 dt at a = 0.
double ou_step_variance(const OuParams& ou, double dt);

/// Stationary-scale half width used for grid construction: sigma * sqrt(T).
double ou_horizon_scale(const OuParams& ou, double horizon);

/// Exact-distribution path Z_0..Z_steps at spacing dt, Z_0 = ou.initial.
/// Reproducible for a fixed seed.
std::vector<double> simulate_ou_path(const OuParams& ou, double dt, int steps,
                                     std::uint64_t seed);

/// Stateless per-stream seed derivation (splitmix64 of master xor stream).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace switchdp
