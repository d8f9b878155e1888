#include "switchdp/markov_chain.hpp"

#include <cmath>

#include "switchdp/errors.hpp"

namespace switchdp {

namespace {

double normal_cdf(double u) { return 0.5 * std::erfc(-u / std::numbers::sqrt2); }

}  // namespace

MarkovChain::MarkovChain(StateGrid states, TimeGrid times, Eigen::MatrixXd transition)
    : states_(std::move(states)), times_(std::move(times)),
      transition_(std::move(transition)) {
  if (transition_.rows() != states_.size() || transition_.cols() != states_.size())
    throw ConfigError("markov chain: transition dimensions do not match the grid");
}

double MarkovChain::row_mean(int i) const {
  double m = 0.0;
  for (int j = 0; j < states_.size(); ++j) m += transition_(i, j) * states_.node(j);
  return m;
}

double MarkovChain::row_variance(int i) const {
  const double m = row_mean(i);
  double v = 0.0;
  for (int j = 0; j < states_.size(); ++j) {
    const double d = states_.node(j) - m;
    v += transition_(i, j) * d * d;
  }
  return v;
}

MarkovChain build_markov_chain(const OuParams& ou, const StateGrid& states,
                               const TimeGrid& times) {
  const int m = states.size();
  const double dt = times.dt();
  const double decay = ou_decay(ou, dt);
  const double sd = std::sqrt(ou_step_variance(ou, dt));

  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m, m);
  if (sd == 0.0) {
    for (int i = 0; i < m; ++i)
      p(i, states.nearest_index(states.node(i) * decay)) = 1.0;
    return MarkovChain(states, times, std::move(p));
  }

  const double h = states.spacing();
  for (int i = 0; i < m; ++i) {
    const double mean = states.node(i) * decay;
    double prev = 0.0;  // cdf at the lower cell edge; -inf for the first cell
    for (int j = 0; j < m; ++j) {
      const double upper = j == m - 1
                               ? 1.0
                               : normal_cdf((states.node(j) + 0.5 * h - mean) / sd);
      p(i, j) = upper - prev;
      prev = upper;
    }
    p.row(i) /= p.row(i).sum();
  }
  return MarkovChain(states, times, std::move(p));
}

}  // namespace switchdp
