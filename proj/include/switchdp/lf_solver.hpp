#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "switchdp/fleet.hpp"
#include "switchdp/forecast.hpp"
#include "switchdp/markov_chain.hpp"
#include "switchdp/reward.hpp"

namespace switchdp {

struct SolveOptions {
  int threads = 1;
  /// Extra delay-window slices beyond ceil(max ramp / dt); extending the
  /// window must never change results (the shortfall vanishes out there).
  int window_extra = 0;
};

struct SolveReport {
  double wall_seconds = 0.0;
  int modes = 0;
  int time_steps = 0;
  int state_nodes = 0;
  int lambda_window = 0;  // offsets stored per table: 0..lambda_window
  std::size_t peak_lambda_bytes = 0;
  std::size_t table_bytes = 0;
};

/// Values over (mode, time level, state node), stored in the solver (reward)
/// convention; reported() flips the sign back for minimization problems.
class ValueTable {
 public:
  ValueTable(int modes, int levels, int nodes, bool minimizing);

  int modes() const { return modes_; }
  int levels() const { return levels_; }
  int nodes() const { return nodes_; }
  bool minimizing() const { return minimizing_; }

  double value(Mode b, int l, int j) const { return data_[index(b, l, j)]; }
  double reported(Mode b, int l, int j) const {
    return minimizing_ ? -value(b, l, j) : value(b, l, j);
  }
  double& at(Mode b, int l, int j) { return data_[index(b, l, j)]; }

  /// Column-major (node, mode) slice of one time level.
  Eigen::Map<const Eigen::MatrixXd> level_slice(int l) const;
  Eigen::Map<Eigen::MatrixXd> level_slice(int l);

  std::size_t bytes() const { return data_.size() * sizeof(double); }

 private:
  std::size_t index(Mode b, int l, int j) const {
    return (static_cast<std::size_t>(l) * modes_ + b) * nodes_ + j;
  }
  int modes_, levels_, nodes_;
  bool minimizing_;
  std::vector<double> data_;
};

/// Chosen action per (mode, time level, state node); the level-N slice is the
/// identity since no switching happens at the horizon.
class PolicyTable {
 public:
  PolicyTable(int modes, int levels, int nodes);

  int modes() const { return modes_; }
  int levels() const { return levels_; }
  int nodes() const { return nodes_; }

  Mode action(Mode b, int l, int j) const { return data_[index(b, l, j)]; }
  Mode& at(Mode b, int l, int j) { return data_[index(b, l, j)]; }
  std::span<const Mode> slice(int l) const;

 private:
  std::size_t index(Mode b, int l, int j) const {
    return (static_cast<std::size_t>(l) * modes_ + b) * nodes_ + j;
  }
  int modes_, levels_, nodes_;
  std::vector<Mode> data_;
};

/// Argmax with deterministic ties: prefer staying, then the lowest bitmask.
/// `candidates` holds one value per mode.
Mode select_action(Mode stay, std::span<const double> candidates);

struct QueryResult {
  double value = 0.0;  // reported convention
  bool clamped = false;
};

/// Nearest-node lookup (no interpolation); x beyond the grid clamps to the
/// edge node and sets the flag. x is in signal units, z = x - d(t_l).
QueryResult query_value(const ValueTable& table, const MarkovChain& chain,
                        const Forecast& forecast, Mode b, int l, double x);

class ModeLayouts;

/// Rolling expectation tables behind the discrete delay revenue: lin holds the
/// linear coefficient per on-unit, quad the quadratic coefficient per on-pair,
/// each over (offset, state node). Entries exist only for units that are on in
/// the table's mode; quad is symmetric in the pair.
class LambdaTables {
 public:
  int window() const { return window_; }
  double lin(Mode b, int unit, int offset, int node) const;
  double quad(Mode b, int i, int j, int offset, int node) const;
  std::size_t bytes() const;

 private:
  friend class LfSolver;
  LambdaTables(std::shared_ptr<const ModeLayouts> layouts, int window, int nodes);

  Eigen::MatrixXd& lin_block(Mode b) { return lin_[b]; }
  Eigen::MatrixXd& quad_block(Mode b) { return quad_[b]; }
  const Eigen::MatrixXd& lin_block(Mode b) const { return lin_[b]; }
  const Eigen::MatrixXd& quad_block(Mode b) const { return quad_[b]; }

  std::shared_ptr<const ModeLayouts> layouts_;
  int window_;
  int nodes_;
  std::vector<Eigen::MatrixXd> lin_;   // per mode: nodes x (on_units * (window+1))
  std::vector<Eigen::MatrixXd> quad_;  // per mode: nodes x (pairs * (window+1))
};

struct LfResult {
  ValueTable values;
  PolicyTable policy;
  SolveReport report;
};

/// Backward induction for the limited-feedback value tables: at each grid time
/// the decision sees only (t, x, mode), assumes the fleet fully ramped, and the
/// expectation is corrected by the delay revenue assembled from the lambda
/// tables. Drives one full solve via solve(); tests can single-step instead.
class LfSolver {
 public:
  LfSolver(const MarkovChain& chain, const Fleet& fleet, const QuadraticReward& reward,
           const Forecast& forecast, SolveOptions options = {});
  ~LfSolver();

  LfResult solve();

  // Stepwise interface. init_terminal() seeds level N; each step() computes
  // level() - 1. Tables and slices refer to the current level.
  void init_terminal();
  void step();
  bool done() const { return level_ == 0; }
  int level() const { return level_; }
  const LambdaTables& lambda() const { return *cur_; }
  const ValueTable& values() const { return values_; }
  const PolicyTable& policy() const { return policy_; }

  /// Discrete delay revenue for a switch from `from` to `to` decided one step
  /// before the current level, evaluated at (t_level, node) with the current
  /// tables. Reference implementation; the sweep uses a batched equivalent.
  double delay_revenue(Mode from, Mode to, int node) const;

  LfResult finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  ValueTable values_;
  PolicyTable policy_;
  std::unique_ptr<LambdaTables> cur_;
  std::unique_ptr<LambdaTables> next_;
  int level_ = -1;
};

LfResult solve_limited_feedback(const MarkovChain& chain, const Fleet& fleet,
                                const QuadraticReward& reward, const Forecast& forecast,
                                SolveOptions options = {});

/// Number of grid steps covering `duration` (ceil with a tolerance for binary
/// rounding of dt); shared by the lambda window and the oracle clock sets.
int steps_covering(double duration, double dt);

}  // namespace switchdp
