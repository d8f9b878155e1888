#pragma once

#include "switchdp/errors.hpp"

namespace switchdp {

/// Uniform decision grid on [0, T]: nodes t_l = l*dt, l = 0..steps, dt = T/steps.
/// Interventions are restricted to grid nodes (Bermudan restriction).
class TimeGrid {
 public:
  TimeGrid(double horizon_hours, int step_count)
      : horizon_(horizon_hours), steps_(step_count) {
    if (!(horizon_ > 0.0)) throw ConfigError("time grid: horizon must be positive");
    if (steps_ < 2) throw ConfigError("time grid: need at least 2 steps");
  }

  double horizon() const { return horizon_; }
  int steps() const { return steps_; }
  int nodes() const { return steps_ + 1; }
  double dt() const { return horizon_ / steps_; }

  /// t_l; exact at both endpoints.
  double node(int l) const { return horizon_ * l / steps_; }

 private:
  double horizon_;
  int steps_;
};

}  // namespace switchdp
