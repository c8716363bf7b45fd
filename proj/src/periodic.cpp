#include "maxsev/periodic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace maxsev {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PeriodicFn::PeriodicFn(double period, double level, std::vector<Harmonic> harmonics)
    : period_(period), level_(level), harmonics_(std::move(harmonics)) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw invalid_period("PeriodicFn: period must be finite and > 0");
  }
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw non_positive_error("PeriodicFn: level must be finite and > 0");
  }
  for (const auto& term : harmonics_) {
    if (term.k < 1) {
      throw std::invalid_argument("PeriodicFn: harmonic index must be >= 1");
    }
    if (!std::isfinite(term.cos_coeff) || !std::isfinite(term.sin_coeff)) {
      throw std::invalid_argument("PeriodicFn: harmonic coefficients must be finite");
    }
  }
}

double PeriodicFn::operator()(double y) const noexcept {
  double value = level_;
  for (const auto& term : harmonics_) {
    const double phase = kTwoPi * term.k * y / period_;
    value += term.cos_coeff * std::cos(phase) + term.sin_coeff * std::sin(phase);
  }
  return value;
}

double PeriodicFn::derivative(double y) const noexcept {
  double value = 0.0;
  for (const auto& term : harmonics_) {
    const double freq = kTwoPi * term.k / period_;
    const double phase = freq * y;
    value += freq * (term.sin_coeff * std::cos(phase) - term.cos_coeff * std::sin(phase));
  }
  return value;
}

double PeriodicFn::amplitude_bound() const noexcept {
  double bound = level_;
  for (const auto& term : harmonics_) {
    bound += std::abs(term.cos_coeff) + std::abs(term.sin_coeff);
  }
  return bound;
}

bool PeriodicFn::is_constant() const noexcept {
  for (const auto& term : harmonics_) {
    if (term.cos_coeff != 0.0 || term.sin_coeff != 0.0) return false;
  }
  return true;
}

ValidationReport validate(const PeriodicFn& h, double alpha, Branch branch, int grid_size) {
  if (grid_size < 256) {
    throw std::invalid_argument("validate: grid_size must be >= 256");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("validate: alpha must be finite and > 0");
  }

  double min_h = std::numeric_limits<double>::infinity();
  double margin = std::numeric_limits<double>::infinity();
  const double step = h.period() / grid_size;
  for (int i = 0; i < grid_size; ++i) {
    const double y = i * step;
    const double hy = h(y);
    const double dy = h.derivative(y);
    min_h = std::min(min_h, hy);
    const double m = branch == Branch::frechet ? alpha * hy - dy : alpha * hy + dy;
    margin = std::min(margin, m);
  }

  ValidationReport report;
  report.grid_size = grid_size;
  report.min_value = min_h;
  report.monotonicity_margin = margin;
  report.positive = min_h > kPositivityFloor;
  report.monotone = margin >= 0.0;
  return report;
}

}  // namespace maxsev
