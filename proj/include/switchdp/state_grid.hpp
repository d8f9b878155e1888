#pragma once

#include <span>
#include <vector>

#include "switchdp/ou.hpp"

namespace switchdp {

/// Uniform symmetric grid for the centered process Z. Node count is odd so that
/// 0 is always a node; node j and node M-1-j are exact negatives of each other.
class StateGrid {
 public:
  /// Uniform nodes on [-half_width, half_width]; node_count odd, >= 3.
  static StateGrid symmetric(int node_count, double half_width);

  int size() const { return static_cast<int>(nodes_.size()); }
  double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  std::span<const double> nodes() const { return nodes_; }
  double spacing() const { return spacing_; }
  double half_width() const { return nodes_.back(); }

  /// Index of the node closest to z; the lower index wins on exact midpoints.
  int nearest_index(double z) const;
  /// As above; *clamped set when z lies outside the grid range.
  int nearest_index(double z, bool* clamped) const;

 private:
  std::vector<double> nodes_;
  double spacing_ = 0.0;
};

/// Grid over Z covering +-span_multiplier * sigma * sqrt(T), centered at 0.
/// With sigma = 0 the scale degenerates; falls back to half width 1.
StateGrid build_state_grid(const OuParams& ou, double horizon, int node_count,
                           double span_multiplier = 4.0);

}  // namespace switchdp
