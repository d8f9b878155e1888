#pragma once

#include <Eigen/Dense>

#include "switchdp/ou.hpp"
#include "switchdp/state_grid.hpp"
#include "switchdp/time_grid.hpp"

namespace switchdp {

/// Markov-chain approximation of the centered OU noise on a state grid.
/// The OU transition on Z has constant coefficients, so one row-stochastic
/// matrix serves every time step.
class MarkovChain {
 public:
  MarkovChain(StateGrid states, TimeGrid times, Eigen::MatrixXd transition);

  const StateGrid& states() const { return states_; }
  const TimeGrid& times() const { return times_; }

  /// Transition matrix for step l -> l+1 (identical for all l).
  const Eigen::MatrixXd& transition(int /*l*/ = 0) const { return transition_; }

  /// One-step conditional mean and variance implied by row i; test oracle for
  /// local consistency against the OU moments.
  double row_mean(int i) const;
  double row_variance(int i) const;

 private:
  StateGrid states_;
  TimeGrid times_;
  Eigen::MatrixXd transition_;
};

/// Exact OU conditional law integrated over the Voronoi cell of each node;
/// tail mass lumped onto the boundary nodes. With sigma = 0 each row is a unit
/// mass on the node nearest to the decayed mean.
MarkovChain build_markov_chain(const OuParams& ou, const StateGrid& states,
                               const TimeGrid& times);

}  // namespace switchdp
