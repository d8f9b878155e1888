#include "switchdp/fleet.hpp"

#include <bit>
#include <string>

#include "switchdp/errors.hpp"

namespace switchdp {

int on_count(Mode b) { return std::popcount(b); }

Fleet::Fleet(std::vector<Unit> units) : units_(std::move(units)) {
  if (units_.empty()) throw ConfigError("fleet: need at least one unit");
  if (units_.size() > 30) throw ConfigError("fleet: at most 30 units supported");
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const Unit& u = units_[i];
    const std::string tag = "fleet unit " + std::to_string(i + 1);
    if (!(u.capacity > 0.0)) throw ConfigError(tag + ": capacity must be positive");
    if (u.ramp_dead_time < 0.0)
      throw ConfigError(tag + ": ramp dead time must be nonnegative");
    if (!(u.ramp_dead_time < u.ramp_total))
      throw ConfigError(tag + ": ramp dead time must be smaller than ramp total");
    if (!(u.on_cost + u.off_cost > 0.0))
      throw ConfigError(tag + ": on cost + off cost must be positive");
  }
}

Fleet Fleet::select(std::span<const int> indices) const {
  if (indices.empty()) throw ConfigError("fleet: sub-fleet selection is empty");
  std::vector<Unit> picked;
  picked.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= size())
      throw ConfigError("fleet: sub-fleet index " + std::to_string(i + 1) +
                        " out of range");
    picked.push_back(unit(i));
  }
  return Fleet(std::move(picked));
}

double Fleet::max_ramp_total() const {
  double m = 0.0;
  for (const Unit& u : units_) m = std::max(m, u.ramp_total);
  return m;
}

Eigen::VectorXd Fleet::marginal_costs() const {
  Eigen::VectorXd c(size());
  for (int i = 0; i < size(); ++i) c[i] = unit(i).marginal_cost;
  return c;
}

double ramp_output(const Unit& u, double s) {
  if (s <= u.ramp_dead_time) return 0.0;
  if (s >= u.ramp_total) return u.capacity;
  return (s - u.ramp_dead_time) / (u.ramp_total - u.ramp_dead_time) * u.capacity;
}

double ramp_shortfall(const Unit& u, double s) { return u.capacity - ramp_output(u, s); }

Eigen::VectorXd mode_output(const Fleet& fleet, Mode b) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(fleet.size());
  for (int i = 0; i < fleet.size(); ++i)
    if (unit_on(b, i)) p[i] = fleet.unit(i).capacity;
  return p;
}

Eigen::VectorXd clock_output(const Fleet& fleet, Mode b, std::span<const double> clocks) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(fleet.size());
  for (int i = 0; i < fleet.size(); ++i)
    if (unit_on(b, i)) p[i] = ramp_output(fleet.unit(i), clocks[static_cast<std::size_t>(i)]);
  return p;
}

double switch_cost(const Fleet& fleet, Mode from, Mode to, double /*t*/) {
  double c = 0.0;
  for (int i = 0; i < fleet.size(); ++i) {
    if (unit_on(from, i) == unit_on(to, i)) continue;
    c += unit_on(to, i) ? fleet.unit(i).on_cost : fleet.unit(i).off_cost;
  }
  return c;
}

}  // namespace switchdp
