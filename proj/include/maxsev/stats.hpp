#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "maxsev/errors.hpp"

namespace maxsev {

// Sorted sample container. Evaluation at x returns (#values <= x)/n, the
// right-continuous empirical distribution function.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);

  double operator()(double x) const noexcept;
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

struct KsReport {
  double statistic = 0.0;
  std::size_t n = 0;
  std::optional<std::size_t> m;  // second sample size, two-sample only
  double critical_value = 0.0;
  double level = 0.0;
  bool pass = false;  // statistic < critical_value
};

// Asymptotic critical coefficients: 1.358 at the 5% level, 1.628 at 1%.
// Only these two levels are supported.
double ks_critical_coefficient(double level);

// One-sample Kolmogorov-Smirnov: statistic = max_i of
// max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n), critical value c(level)/sqrt(n).
// Requires n >= 8.
KsReport ks_one_sample(std::span<const double> sample,
                       const std::function<double(double)>& cdf, double level);

// Two-sample Kolmogorov-Smirnov: sup |ECDF_a - ECDF_b| over the merged
// points (both step heights are applied before comparing, which handles
// ties), critical value c(level) sqrt((n+m)/(n m)). Requires both >= 8.
KsReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level);

}  // namespace maxsev
