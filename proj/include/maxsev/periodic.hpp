#pragma once

#include <vector>

#include "maxsev/errors.hpp"

namespace maxsev {

enum class Branch { frechet, weibull };

// One term of the trigonometric series: index k (multiple of the fundamental
// frequency), cosine and sine coefficients.
struct Harmonic {
  int k = 1;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
};

// Positive bounded periodic perturbation represented as a finite
// trigonometric series
//
//   h(y) = level + sum_k [ c_k cos(2 pi k y / period) + s_k sin(2 pi k y / period) ]
//
// Only multiples of 2 pi / period enter the phase, so h(y + period) = h(y)
// holds structurally, and |h| <= level + sum(|c_k| + |s_k|) by the triangle
// inequality. The representation is closed under differentiation, which
// gives the exact h' needed for the distribution-function monotonicity
// check in validate().
class PeriodicFn {
 public:
  PeriodicFn(double period, double level, std::vector<Harmonic> harmonics = {});

  static PeriodicFn constant(double period, double level) { return {period, level}; }

  double period() const noexcept { return period_; }
  double level() const noexcept { return level_; }
  const std::vector<Harmonic>& harmonics() const noexcept { return harmonics_; }

  double operator()(double y) const noexcept;
  double derivative(double y) const noexcept;

  double amplitude_bound() const noexcept;
  bool is_constant() const noexcept;

 private:
  double period_;
  double level_;
  std::vector<Harmonic> harmonics_;
};

// Grid validation outcome for a perturbation under a given tail index and
// branch. The margins are attained values, useful when diagnosing a
// rejected configuration.
struct ValidationReport {
  bool positive = false;             // min h over the grid > 1e-9
  bool monotone = false;             // branch condition holds on the grid
  double min_value = 0.0;            // attained min of h over one period
  double monotonicity_margin = 0.0;  // min of (alpha h - h') resp. (alpha h + h')
  int grid_size = 0;

  bool valid() const noexcept { return positive && monotone; }
};

inline constexpr int kDefaultValidationGrid = 4096;
inline constexpr double kPositivityFloor = 1e-9;

// Scans grid_size equi-spaced points of [0, period) and checks
//   (i)  positivity: min h > 1e-9 (strictly, so a minimum that is only
//        round-off noise is rejected), and
//   (ii) monotonicity of the tail function the perturbation induces:
//          Frechet: h'(y) <= alpha h(y),  so x^-alpha h(ln x) is decreasing;
//          Weibull: h'(y) >= -alpha h(y), so |x|^alpha h(ln|x|) decreases in x.
// h' is evaluated in closed form from the series. grid_size must be >= 256.
ValidationReport validate(const PeriodicFn& h, double alpha, Branch branch,
                          int grid_size = kDefaultValidationGrid);

}  // namespace maxsev
