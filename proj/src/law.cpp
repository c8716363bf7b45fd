#include "maxsev/law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "maxsev/random.hpp"

namespace maxsev {

namespace {

constexpr double kPeriodMatchTol = 1e-12;
constexpr double kStoredATol = 1e-12;

double derived_a(Branch branch, double alpha, double b) {
  return branch == Branch::frechet ? std::pow(b, alpha) : std::pow(b, -alpha);
}

}  // namespace

SemiStableLaw::SemiStableLaw(Branch branch, double alpha, double b, PeriodicFn h, bool checked)
    : branch_(branch), alpha_(alpha), b_(b), a_(derived_a(branch, alpha, b)), h_(std::move(h)) {
  if (!checked) return;

  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("SemiStableLaw: alpha must be finite and > 0");
  }
  if (branch_ == Branch::frechet) {
    if (!(b > 1.0) || !std::isfinite(b)) {
      throw std::invalid_argument("SemiStableLaw: Frechet branch requires b > 1");
    }
  } else {
    if (!(b > 0.0 && b < 1.0)) {
      throw std::invalid_argument("SemiStableLaw: Weibull branch requires 0 < b < 1");
    }
  }
  const double expected_period = std::abs(std::log(b_));
  if (std::abs(h_.period() - expected_period) > kPeriodMatchTol * std::max(1.0, expected_period)) {
    throw invalid_period("SemiStableLaw: h.period must equal |ln b|");
  }
  const ValidationReport report = validate(h_, alpha_, branch_);
  if (!report.positive) {
    throw non_positive_error("SemiStableLaw: h is not strictly positive on the validation grid");
  }
  if (!report.monotone) {
    throw non_monotone_tail_error(
        "SemiStableLaw: h violates the branch monotonicity condition, F would not be a d.f.");
  }
}

SemiStableLaw::SemiStableLaw(Branch branch, double alpha, double b, PeriodicFn h)
    : SemiStableLaw(branch, alpha, b, std::move(h), true) {}

SemiStableLaw::SemiStableLaw(Branch branch, double alpha, double b, double a, PeriodicFn h)
    : SemiStableLaw(branch, alpha, b, std::move(h), true) {
  if (!(std::abs(a - a_) <= kStoredATol * a_)) {
    throw std::invalid_argument("SemiStableLaw: supplied a disagrees with b^alpha side condition");
  }
}

SemiStableLaw SemiStableLaw::unchecked(Branch branch, double alpha, double b, PeriodicFn h) {
  return SemiStableLaw(branch, alpha, b, std::move(h), false);
}

double SemiStableLaw::tail(double x) const {
  if (branch_ == Branch::frechet) {
    if (!(x > 0.0)) throw domain_error("tail: Frechet support is x > 0");
    if (std::isinf(x)) return 0.0;
    return std::pow(x, -alpha_) * h_(std::log(x));
  }
  if (!(x < 0.0)) throw domain_error("tail: Weibull support is x < 0");
  const double m = -x;
  if (std::isinf(m)) return std::numeric_limits<double>::infinity();
  return std::pow(m, alpha_) * h_(std::log(m));
}

double SemiStableLaw::cdf(double x) const {
  if (branch_ == Branch::frechet) {
    if (!(x > 0.0)) return 0.0;
    return std::exp(-tail(x));
  }
  if (!(x < 0.0)) return 1.0;
  return std::exp(-tail(x));
}

double SemiStableLaw::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::invalid_argument("quantile: u must lie in (0,1)");
  }
  return quantile_from_tail(-std::log(u));
}

double SemiStableLaw::quantile_from_tail(double target) const {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw std::invalid_argument("quantile_from_tail: target must be finite and > 0");
  }

  // Tail magnitude p(m), m = |x|:
  //   Frechet: p(m) = m^-alpha h(ln m), strictly decreasing;
  //   Weibull: p(m) = m^alpha  h(ln m), strictly increasing.
  // Both scale as p(b^k m) = a^-k p(m), so the target is shifted into the
  // p-image of the reference interval [min(1,b), max(1,b)] whose endpoint
  // values are p(1) = h(0) and h(0)/a.
  const bool increasing = branch_ == Branch::weibull;
  const auto p = [&](double m) {
    const double power = increasing ? std::pow(m, alpha_) : std::pow(m, -alpha_);
    return power * h_(std::log(m));
  };
  const auto dp = [&](double m) {
    const double y = std::log(m);
    const double hy = h_(y);
    const double dy = h_.derivative(y);
    return increasing ? std::pow(m, alpha_ - 1.0) * (alpha_ * hy + dy)
                      : std::pow(m, -alpha_ - 1.0) * (dy - alpha_ * hy);
  };

  const double m_lo = std::min(1.0, b_);
  const double m_hi = std::max(1.0, b_);
  const double p_lo_end = p(m_lo);
  const double p_hi_end = p(m_hi);
  const double p_min = std::min(p_lo_end, p_hi_end);
  const double p_max = std::max(p_lo_end, p_hi_end);

  const double log_a = std::log(a_);
  double k = std::floor(std::log(h_(0.0) / target) / log_a);
  double scaled = target * std::pow(a_, k);
  for (int guard = 0; (scaled > p_max || scaled < p_min) && guard < 64; ++guard) {
    k += scaled > p_max ? -1.0 : 1.0;
    scaled = target * std::pow(a_, k);
  }
  if (scaled > p_max || scaled < p_min) {
    // At most one ulp outside after the adjustment loop; clamping shifts the
    // effective target by the same ulp.
    scaled = std::clamp(scaled, p_min, p_max);
    if (!std::isfinite(scaled)) {
      throw convergence_error("quantile: failed to renormalize target into one period");
    }
  }

  // Safeguarded Newton on g(m) = p(m) - scaled inside [lo, hi].
  double lo = m_lo;
  double hi = m_hi;
  double m = 0.5 * (lo + hi);
  constexpr int kMaxIter = 200;
  int it = 0;
  for (; it < kMaxIter; ++it) {
    const double g = p(m) - scaled;
    if (g == 0.0) break;
    const bool root_below = increasing ? g > 0.0 : g < 0.0;
    if (root_below) {
      hi = m;
    } else {
      lo = m;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * lo) break;
    const double d = dp(m);
    double next = m - g / d;
    if (!(next > lo && next < hi) || it % 2 == 1) {
      next = 0.5 * (lo + hi);
    }
    if (next == m) break;
    m = next;
  }
  if (it == kMaxIter) {
    throw convergence_error("quantile: root find did not converge; law invariants are broken");
  }

  const double magnitude = std::pow(b_, k) * m;
  return branch_ == Branch::frechet ? magnitude : -magnitude;
}

std::vector<double> SemiStableLaw::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  Rng rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(quantile_from_tail(-std::log(rng.open01())));
  }
  return out;
}

double SemiStableLaw::cofactor(double x, double scale) const {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("cofactor: scale must be finite and > 0");
  }
  return std::exp(tail(scale * x) - tail(x));
}

IdentityReport check_semi_stable_identity(const SemiStableLaw& law, std::span<const double> grid,
                                          double b_scale, double tolerance) {
  const double a_scale = law.branch() == Branch::frechet ? std::pow(b_scale, law.alpha())
                                                         : std::pow(b_scale, -law.alpha());
  double max_err = 0.0;
  for (double x : grid) {
    const double psi = law.tail(x);
    const double scaled = a_scale * law.tail(b_scale * x);
    max_err = std::max(max_err, std::abs(psi - scaled) / psi);
  }
  return {max_err, tolerance, max_err <= tolerance};
}

IdentityReport check_semi_stable_identity(const SemiStableLaw& law, std::span<const double> grid,
                                          double tolerance) {
  return check_semi_stable_identity(law, grid, law.b(), tolerance);
}

namespace {

constexpr double kLimitTol = 1e-6;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kCdfUnderflow = 1e-300;

CofactorCheck analyze_cofactor(std::vector<double> values, double scale) {
  CofactorCheck check;
  check.scale = scale;
  check.c = scale > 1.0 ? scale : 1.0 / scale;

  if (values.size() < 2) return check;

  double worst = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    worst = std::max(worst, values[i - 1] - values[i]);
  }
  check.worst_violation = worst;
  check.non_decreasing = worst <= kMonotoneSlack;
  check.limits_ok = values.front() <= kLimitTol && values.back() >= 1.0 - kLimitTol;

  // Non-degenerate: a point mass only ever produces ratios 0 and 1, so ask
  // for two distinct interior values instead of merely two distinct ones.
  double interior_min = std::numeric_limits<double>::infinity();
  double interior_max = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (v >= kLimitTol && v <= 1.0 - kLimitTol) {
      interior_min = std::min(interior_min, v);
      interior_max = std::max(interior_max, v);
    }
  }
  check.non_degenerate = interior_max - interior_min > kLimitTol;

  check.verdict = check.non_decreasing && check.limits_ok && check.non_degenerate;
  return check;
}

void require_sorted(std::span<const double> grid) {
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw std::invalid_argument("check_max_semi_sd: grid must be sorted ascending");
  }
}

}  // namespace

CofactorCheck check_max_semi_sd(const std::function<double(double)>& cdf, double scale,
                                std::span<const double> grid) {
  if (!(scale > 0.0) || scale == 1.0) {
    throw std::invalid_argument("check_max_semi_sd: scale must be positive and != 1");
  }
  require_sorted(grid);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) {
    const double denom = cdf(scale * x);
    if (denom < kCdfUnderflow) continue;  // H unconstrained where F(scale x) = 0
    values.push_back(cdf(x) / denom);
  }
  return analyze_cofactor(std::move(values), scale);
}

CofactorCheck check_max_semi_sd(const SemiStableLaw& law, double scale,
                                std::span<const double> grid) {
  if (!(scale > 0.0) || scale == 1.0) {
    throw std::invalid_argument("check_max_semi_sd: scale must be positive and != 1");
  }
  require_sorted(grid);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) {
    values.push_back(law.cofactor(x, scale));
  }
  return analyze_cofactor(std::move(values), scale);
}

std::vector<double> quantile_grid(const SemiStableLaw& law, std::span<const double> levels) {
  std::vector<double> grid;
  grid.reserve(levels.size());
  for (double u : levels) grid.push_back(law.quantile(u));
  return grid;
}

std::vector<double> standard_levels() {
  std::vector<double> levels;
  levels.reserve(99);
  for (int i = 1; i <= 99; ++i) levels.push_back(i / 100.0);
  return levels;
}

std::vector<double> extended_levels() {
  std::vector<double> levels = {1e-13, 1e-10, 1e-7, 1e-4, 1e-3};
  const auto body = standard_levels();
  levels.insert(levels.end(), body.begin(), body.end());
  levels.insert(levels.end(), {1.0 - 1e-3, 1.0 - 1e-4, 1.0 - 1e-6, 1.0 - 1e-9, 1.0 - 1e-12});
  return levels;
}

}  // namespace maxsev
