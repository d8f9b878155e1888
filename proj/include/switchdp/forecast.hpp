#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace switchdp {

/// Deterministic signal forecast d(t) on [0, T]. The tracked signal is
/// X_t = d(t) + Z_t with Z the centered noise process, so all solvers
/// evaluate rewards at x = d(t) + z.
class Forecast {
 public:
  /// d1(t) = 100 + 20 t
  static Forecast linear(double horizon);
  /// d2(t) = 500 (1 - (2/T) |t - T/2|)
  static Forecast triangle(double horizon);
  /// d3(t) = 250 (1 + sin(2 pi t / T))
  static Forecast sine(double horizon);
  /// Lookup by config identifier "d1" / "d2" / "d3".
  static Forecast by_id(std::string_view id, double horizon);
  /// Arbitrary profile under the "custom" identifier.
  static Forecast custom(double horizon, std::function<double(double)> fn);
  /// Piecewise-linear profile through (t, value) points covering [0, T].
  static Forecast piecewise_linear(double horizon,
                                   std::vector<std::pair<double, double>> points);

  /// Evaluate d(t); throws std::domain_error outside [0, T].
  double operator()(double t) const;

  const std::string& id() const { return id_; }
  double horizon() const { return horizon_; }

 private:
  Forecast(std::string id, double horizon, std::function<double(double)> fn)
      : id_(std::move(id)), horizon_(horizon), fn_(std::move(fn)) {}

  std::string id_;
  double horizon_;
  std::function<double(double)> fn_;
};

}  // namespace switchdp
