#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace switchdp {

/// One production unit. Output after a switch-on follows the ramp
///   R(s) = 0 for s < dead time, linear up to capacity at ramp_total,
/// and stays at capacity afterwards. Turn-offs are immediate.
struct Unit {
  double capacity = 0.0;        // Cp, output units
  double on_cost = 0.0;         // switch off -> on, money
  double off_cost = 0.0;        // switch on -> off, money
  double marginal_cost = 0.0;   // money per output-unit-hour
  double ramp_dead_time = 0.0;  // hours of zero output after switch-on
  double ramp_total = 0.0;      // hours until full capacity
};

/// Operating mode as a bitmask over the active fleet; bit i set = unit i on.
using Mode = std::uint32_t;

constexpr bool unit_on(Mode b, int i) { return (b >> i) & 1u; }
constexpr int mode_count(int units) { return 1 << units; }
int on_count(Mode b);

/// Ordered, validated collection of active units. Solvers always work on the
/// active sub-fleet; selecting a sub-fleet yields a new Fleet.
class Fleet {
 public:
  explicit Fleet(std::vector<Unit> units);

  int size() const { return static_cast<int>(units_.size()); }
  const Unit& unit(int i) const { return units_[static_cast<std::size_t>(i)]; }
  std::span<const Unit> units() const { return units_; }

  /// Sub-fleet by 0-based indices, preserving the given order.
  Fleet select(std::span<const int> indices) const;

  int modes() const { return mode_count(size()); }
  double max_ramp_total() const;
  Eigen::VectorXd marginal_costs() const;

 private:
  std::vector<Unit> units_;
};

/// Ramp output R(s) for elapsed on-time s >= 0 (clamped at capacity).
double ramp_output(const Unit& u, double s);

/// Capacity shortfall Cp - R(s); zero once fully ramped.
double ramp_shortfall(const Unit& u, double s);

/// Full-capacity output vector p^b with (p^b)_i = b_i * Cp_i.
Eigen::VectorXd mode_output(const Fleet& fleet, Mode b);

/// Output vector at per-unit clocks (off units contribute zero). `clocks`
/// holds one entry per fleet unit; entries of off units are ignored.
Eigen::VectorXd clock_output(const Fleet& fleet, Mode b, std::span<const double> clocks);

/// Total switching cost from mode `from` to mode `to` at time t: on_cost for
/// every bit turned on, off_cost for every bit turned off. Costs are constant
/// in the benchmark; t is accepted for the general time-dependent interface.
double switch_cost(const Fleet& fleet, Mode from, Mode to, double t);

}  // namespace switchdp
