#include "switchdp/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "switchdp/errors.hpp"

namespace switchdp {

Forecast Forecast::linear(double horizon) {
  return Forecast("d1", horizon, [](double t) { return 100.0 + 20.0 * t; });
}

Forecast Forecast::triangle(double horizon) {
  return Forecast("d2", horizon, [horizon](double t) {
    return 500.0 * (1.0 - (2.0 / horizon) * std::abs(t - horizon / 2.0));
  });
}

Forecast Forecast::sine(double horizon) {
  return Forecast("d3", horizon, [horizon](double t) {
    return 250.0 * (1.0 + std::sin(2.0 * std::numbers::pi * t / horizon));
  });
}

Forecast Forecast::by_id(std::string_view id, double horizon) {
  if (id == "d1") return linear(horizon);
  if (id == "d2") return triangle(horizon);
  if (id == "d3") return sine(horizon);
  throw ConfigError("forecast: unknown identifier '" + std::string(id) +
                    "' (expected d1, d2 or d3)");
}

Forecast Forecast::custom(double horizon, std::function<double(double)> fn) {
  return Forecast("custom", horizon, std::move(fn));
}

Forecast Forecast::piecewise_linear(double horizon,
                                    std::vector<std::pair<double, double>> points) {
  if (points.size() < 2)
    throw ConfigError("forecast: piecewise-linear profile needs at least 2 points");
  if (!std::is_sorted(points.begin(), points.end(),
                      [](auto& a, auto& b) { return a.first < b.first; }))
    throw ConfigError("forecast: piecewise-linear points must have increasing times");
  if (points.front().first > 0.0 || points.back().first < horizon)
    throw ConfigError("forecast: piecewise-linear points must cover [0, horizon]");
  return Forecast("custom", horizon, [pts = std::move(points)](double t) {
    auto hi = std::lower_bound(pts.begin(), pts.end(), t,
                               [](auto& p, double v) { return p.first < v; });
    if (hi == pts.begin()) return hi->second;
    if (hi == pts.end()) return pts.back().second;
    auto lo = hi - 1;
    const double w = (t - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  });
}

double Forecast::operator()(double t) const {
  if (t < 0.0 || t > horizon_)
    throw std::domain_error("forecast: time outside [0, horizon]");
  return fn_(t);
}

}  // namespace switchdp
