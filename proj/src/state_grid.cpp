#include "switchdp/state_grid.hpp"

#include <cmath>

#include "switchdp/errors.hpp"

namespace switchdp {

StateGrid StateGrid::symmetric(int node_count, double half_width) {
  if (node_count < 3) throw ConfigError("state grid: need at least 3 nodes");
  if (node_count % 2 == 0) throw ConfigError("state grid: node count must be odd");
  if (!(half_width > 0.0)) throw ConfigError("state grid: half width must be positive");

  StateGrid g;
  const int center = (node_count - 1) / 2;
  const double h = half_width / center;
  g.spacing_ = h;
  g.nodes_.resize(static_cast<std::size_t>(node_count));
  for (int j = 0; j < node_count; ++j)
    g.nodes_[static_cast<std::size_t>(j)] = (j - center) * h;
  return g;
}

int StateGrid::nearest_index(double z) const {
  bool ignored = false;
  return nearest_index(z, &ignored);
}

int StateGrid::nearest_index(double z, bool* clamped) const {
  *clamped = z < nodes_.front() || z > nodes_.back();
  if (z <= nodes_.front()) return 0;
  if (z >= nodes_.back()) return size() - 1;
  const double pos = (z - nodes_.front()) / spacing_;
  const double lo = std::floor(pos);
  int idx = static_cast<int>(lo);
  if (pos - lo > 0.5) ++idx;  // exact midpoint keeps the lower index
  if (idx > size() - 1) idx = size() - 1;
  return idx;
}

StateGrid build_state_grid(const OuParams& ou, double horizon, int node_count,
                           double span_multiplier) {
  if (!(span_multiplier > 0.0))
    throw ConfigError("state grid: span multiplier must be positive");
  double half_width = span_multiplier * ou_horizon_scale(ou, horizon);
  if (half_width <= 0.0) half_width = 1.0;
  return StateGrid::symmetric(node_count, half_width);
}

}  // namespace switchdp
