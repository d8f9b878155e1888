#include "switchdp/ou.hpp"

#include <cmath>
#include <random>

#include "switchdp/errors.hpp"

namespace switchdp {

double ou_decay(const OuParams& ou, double dt) { return std::exp(-ou.reversion * dt); }

double ou_step_variance(const OuParams& ou, double dt) {
  const double s2 = ou.volatility * ou.volatility;
  if (ou.reversion == 0.0) return s2 * dt;
  return s2 * (1.0 - std::exp(-2.0 * ou.reversion * dt)) / (2.0 * ou.reversion);
}

double ou_horizon_scale(const OuParams& ou, double horizon) {
  return ou.volatility * std::sqrt(horizon);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer; distinct streams stay decorrelated for any master.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> simulate_ou_path(const OuParams& ou, double dt, int steps,
                                     std::uint64_t seed) {
  if (steps < 1) throw ConfigError("ou path: need at least one step");
  if (!(dt > 0.0)) throw ConfigError("ou path: dt must be positive");

  const double decay = ou_decay(ou, dt);
  const double sd = std::sqrt(ou_step_variance(ou, dt));

  std::vector<double> path(static_cast<std::size_t>(steps) + 1);
  path[0] = ou.initial;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int k = 0; k < steps; ++k) {
    const double eps = sd > 0.0 ? sd * noise(rng) : 0.0;
    path[k + 1] = path[k] * decay + eps;
  }
  return path;
}

}  // namespace switchdp
