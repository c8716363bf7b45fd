#include "maxsev/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxsev {

namespace {
constexpr std::size_t kMinSamples = 8;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("EmpiricalCdf: need at least one value");
  }
  std::sort(values_.begin(), values_.end());
}

double EmpiricalCdf::operator()(double x) const noexcept {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double ks_critical_coefficient(double level) {
  if (level == 0.05) return 1.358;
  if (level == 0.01) return 1.628;
  throw std::invalid_argument("ks: level must be 0.05 or 0.01");
}

KsReport ks_one_sample(std::span<const double> sample,
                       const std::function<double(double)>& cdf, double level) {
  const double coeff = ks_critical_coefficient(level);
  const std::size_t n = sample.size();
  if (n < kMinSamples) {
    throw too_few_samples_error("ks_one_sample: need at least 8 samples");
  }

  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  double statistic = 0.0;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    statistic = std::max(statistic, (i + 1) / dn - f);
    statistic = std::max(statistic, f - i / dn);
  }

  KsReport report;
  report.statistic = statistic;
  report.n = n;
  report.critical_value = coeff / std::sqrt(dn);
  report.level = level;
  report.pass = statistic < report.critical_value;
  return report;
}

KsReport ks_two_sample(std::span<const double> a, std::span<const double> b, double level) {
  const double coeff = ks_critical_coefficient(level);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n < kMinSamples || m < kMinSamples) {
    throw too_few_samples_error("ks_two_sample: need at least 8 samples on each side");
  }

  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  double statistic = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  while (i < n || j < m) {
    const double x = [&] {
      if (i == n) return sb[j];
      if (j == m) return sa[i];
      return std::min(sa[i], sb[j]);
    }();
    while (i < n && sa[i] == x) ++i;
    while (j < m && sb[j] == x) ++j;
    statistic = std::max(statistic, std::abs(i / dn - j / dm));
  }

  KsReport report;
  report.statistic = statistic;
  report.n = n;
  report.m = m;
  report.critical_value = coeff * std::sqrt((dn + dm) / (dn * dm));
  report.level = level;
  report.pass = statistic < report.critical_value;
  return report;
}

}  // namespace maxsev
