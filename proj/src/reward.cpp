#include "switchdp/reward.hpp"

#include <stdexcept>
#include <string>

#include "switchdp/errors.hpp"

namespace switchdp {

namespace {

void check_domain(const Fleet& fleet, Mode b, const Eigen::VectorXd& p) {
  if (p.size() != fleet.size())
    throw std::domain_error("reward: output vector size does not match the fleet");
  for (int i = 0; i < fleet.size(); ++i) {
    const double cap = unit_on(b, i) ? fleet.unit(i).capacity : 0.0;
    if (p[i] < 0.0 || p[i] > cap)
      throw std::domain_error("reward: output outside [0, b_i Cp_i] for unit " +
                              std::to_string(i + 1));
  }
}

double quad_form(double c0, const Eigen::VectorXd& c1, const Eigen::MatrixXd& c2,
                 const Eigen::VectorXd& p) {
  return c0 + c1.dot(p) + p.dot(c2 * p);
}

class TrackingReward final : public QuadraticReward {
 public:
  explicit TrackingReward(const TrackingSpec& spec)
      : n_(static_cast<int>(spec.marginal_cost.size())),
        running_penalty_(spec.running_penalty),
        terminal_penalty_(spec.terminal_penalty),
        marginal_(spec.marginal_cost) {}

  int units() const override { return n_; }
  bool minimizing() const override { return true; }
  bool mode_uniform() const override { return true; }

  // Cost f_pen (x - sum p)^2 + c^f' p expands to
  //   f_pen x^2 + (c^f - 2 f_pen x 1)' p + p' (f_pen 1 1') p,
  // negated below into the reward convention.
  double running_const(Mode, double, double x) const override {
    return -running_penalty_ * x * x;
  }
  void running_linear(Mode, double, double x, std::span<double> out) const override {
    for (int i = 0; i < n_; ++i)
      out[static_cast<std::size_t>(i)] = 2.0 * running_penalty_ * x - marginal_[i];
  }
  void running_quad(Mode, double, double, Eigen::Ref<Eigen::MatrixXd> out) const override {
    out.setConstant(-running_penalty_);
  }

  double terminal_const(Mode, double x) const override {
    return -terminal_penalty_ * x * x;
  }
  void terminal_linear(Mode, double x, std::span<double> out) const override {
    for (int i = 0; i < n_; ++i)
      out[static_cast<std::size_t>(i)] = 2.0 * terminal_penalty_ * x;
  }
  void terminal_quad(Mode, double, Eigen::Ref<Eigen::MatrixXd> out) const override {
    out.setConstant(-terminal_penalty_);
  }

 private:
  int n_;
  double running_penalty_;
  double terminal_penalty_;
  Eigen::VectorXd marginal_;
};

}  // namespace

double running_reward(const QuadraticReward& q, const Fleet& fleet, Mode b, double t,
                      double x, const Eigen::VectorXd& p) {
  check_domain(fleet, b, p);
  const int n = q.units();
  Eigen::VectorXd c1(n);
  Eigen::MatrixXd c2(n, n);
  q.running_linear(b, t, x, {c1.data(), static_cast<std::size_t>(n)});
  q.running_quad(b, t, x, c2);
  return quad_form(q.running_const(b, t, x), c1, c2, p);
}

double terminal_reward(const QuadraticReward& q, const Fleet& fleet, Mode b, double x,
                       const Eigen::VectorXd& p) {
  check_domain(fleet, b, p);
  const int n = q.units();
  Eigen::VectorXd c1(n);
  Eigen::MatrixXd c2(n, n);
  q.terminal_linear(b, x, {c1.data(), static_cast<std::size_t>(n)});
  q.terminal_quad(b, x, c2);
  return quad_form(q.terminal_const(b, x), c1, c2, p);
}

std::unique_ptr<QuadraticReward> build_tracking_reward(const TrackingSpec& spec) {
  if (!(spec.running_penalty > 0.0) || !(spec.terminal_penalty > 0.0))
    throw ConfigError("tracking reward: penalties must be positive");
  if (spec.marginal_cost.size() == 0)
    throw ConfigError("tracking reward: marginal cost vector is empty");
  return std::make_unique<TrackingReward>(spec);
}

double tracking_running_cost(const TrackingSpec& spec, double x, const Eigen::VectorXd& p) {
  const double miss = x - p.sum();
  return spec.running_penalty * miss * miss + spec.marginal_cost.dot(p);
}

double tracking_terminal_cost(const TrackingSpec& spec, double x, const Eigen::VectorXd& p) {
  const double miss = x - p.sum();
  return spec.terminal_penalty * miss * miss;
}

}  // namespace switchdp
