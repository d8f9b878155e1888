#pragma once

#include <memory>
#include <span>

#include <Eigen/Dense>

#include "switchdp/fleet.hpp"
#include "switchdp/forecast.hpp"
#include "switchdp/ou.hpp"

namespace switchdp {

/// Reward quadratic in the output vector p, per mode b:
///   running(t, x, p)  = c0(b,t,x) + c1(b,t,x)' p + p' C2(b,t,x) p   [money/hour]
///   terminal(x, p)    = d0(b,x)   + d1(b,x)' p   + p' D2(b,x) p     [money]
/// Coefficients are in the *reward* convention: every solver maximizes. A
/// minimization problem negates its cost coefficients here and sets
/// minimizing() so reported values come out as costs again.
class QuadraticReward {
 public:
  virtual ~QuadraticReward() = default;

  virtual int units() const = 0;
  /// Reported value = -(solver value) when true.
  virtual bool minimizing() const = 0;
  /// True when coefficients do not depend on the mode (lets solvers share
  /// one coefficient evaluation across all modes).
  virtual bool mode_uniform() const { return false; }

  virtual double running_const(Mode b, double t, double x) const = 0;
  virtual void running_linear(Mode b, double t, double x, std::span<double> out) const = 0;
  /// Fills a symmetric units() x units() matrix.
  virtual void running_quad(Mode b, double t, double x,
                            Eigen::Ref<Eigen::MatrixXd> out) const = 0;

  virtual double terminal_const(Mode b, double x) const = 0;
  virtual void terminal_linear(Mode b, double x, std::span<double> out) const = 0;
  virtual void terminal_quad(Mode b, double x, Eigen::Ref<Eigen::MatrixXd> out) const = 0;
};

/// psi_b(t, x, p); throws std::domain_error when p is outside D_p^b,
/// i.e. unless 0 <= p_i <= b_i Cp_i componentwise.
double running_reward(const QuadraticReward& q, const Fleet& fleet, Mode b, double t,
                      double x, const Eigen::VectorXd& p);

/// h_b(x, p) with the same domain rule.
double terminal_reward(const QuadraticReward& q, const Fleet& fleet, Mode b, double x,
                       const Eigen::VectorXd& p);

/// Production-tracking benchmark: minimize
///   integral f_pen (X_t - sum_i p_i)^2 + c^f' p dt  +  f_pen_T (X_T - sum_i p_i)^2
/// plus switching costs.
struct TrackingSpec {
  double running_penalty = 0.1;   // f_pen, money/(signal-unit^2 hour)
  double terminal_penalty = 0.3;  // f_pen_T, money/signal-unit^2
  Eigen::VectorXd marginal_cost;  // c^f per active unit
  Forecast forecast;
  OuParams process;
};

/// Mode-independent quadratic coefficients of the tracking cost, negated into
/// the reward convention (minimizing() = true).
std::unique_ptr<QuadraticReward> build_tracking_reward(const TrackingSpec& spec);

/// Direct evaluation of the tracking cost integrand/terminal (cost convention).
/// Kept as the independent route the coefficient construction is tested against.
double tracking_running_cost(const TrackingSpec& spec, double x, const Eigen::VectorXd& p);
double tracking_terminal_cost(const TrackingSpec& spec, double x, const Eigen::VectorXd& p);

}  // namespace switchdp
