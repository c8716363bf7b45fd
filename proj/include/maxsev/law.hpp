#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "maxsev/periodic.hpp"

namespace maxsev {

// Max-semi-stable(a, b) distribution of one of the two support branches:
//
//   Frechet: F(x) = exp{-x^-alpha h(ln x)},    x > 0,  b > 1,      a = b^alpha
//   Weibull: F(x) = exp{-|x|^alpha h(ln|x|)},  x < 0,  0 < b < 1,  a = b^-alpha
//
// with h positive, bounded and periodic with period |ln b|. The tail
// function psi = -ln F then satisfies psi(x) = a psi(b x) everywhere on the
// support, which is the scaling identity all verification routines test.
// With a constant h both branches collapse to the classical max-stable
// families.
//
// Instances are immutable after construction and safe to share across
// threads. Sampling takes an explicit seed and owns its generator state;
// concurrent sampling should use distinct seeds.
class SemiStableLaw {
 public:
  // Validates everything: branch-appropriate b, h period = |ln b| within
  // 1e-12, and the positivity/monotonicity grid checks on h.
  SemiStableLaw(Branch branch, double alpha, double b, PeriodicFn h);

  // As above but with the redundant a supplied explicitly; throws unless it
  // agrees with b^alpha (Frechet) resp. b^-alpha (Weibull) to 1e-12.
  SemiStableLaw(Branch branch, double alpha, double b, double a, PeriodicFn h);

  // Skips all invariant checks. Exists so that deliberately broken laws can
  // be fed to the verification routines.
  static SemiStableLaw unchecked(Branch branch, double alpha, double b, PeriodicFn h);

  Branch branch() const noexcept { return branch_; }
  double alpha() const noexcept { return alpha_; }
  double b() const noexcept { return b_; }
  double a() const noexcept { return a_; }
  const PeriodicFn& h() const noexcept { return h_; }
  bool is_max_stable() const noexcept { return h_.is_constant(); }

  bool in_support(double x) const noexcept {
    return branch_ == Branch::frechet ? x > 0.0 : x < 0.0;
  }

  // psi(x) = -ln F(x); throws domain_error off the support half-line.
  double tail(double x) const;

  // Total distribution function (0 left of a Frechet support, 1 right of a
  // Weibull support).
  double cdf(double x) const;

  // Inverse of cdf on (0,1), accurate to |cdf(quantile(u)) - u| <= 1e-10.
  double quantile(double u) const;

  // Solves psi(x) = target for target > 0. The target is first renormalized
  // into the psi-image of one reference period via psi(b^k x) = a^-k psi(x),
  // so the root find always happens on [min(1,b), max(1,b)] regardless of
  // how extreme the target is.
  double quantile_from_tail(double target) const;

  // Inverse-transform sampling; one uniform draw per value.
  std::vector<double> sample(std::size_t n, std::uint64_t seed) const;

  // Cofactor H(x) = F(x) / F(scale x) = exp(psi(scale x) - psi(x)) of the
  // factorization F(x) = F(scale x) H(x). With scale = b this equals
  // exp(-(a-1) psi(b x)), a distribution function in its own right.
  double cofactor(double x, double scale) const;
  double cofactor(double x) const { return cofactor(x, b_); }

 private:
  SemiStableLaw(Branch branch, double alpha, double b, PeriodicFn h, bool checked);

  Branch branch_;
  double alpha_;
  double b_;
  double a_;
  PeriodicFn h_;
};

struct IdentityReport {
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-10;

// Max over the grid of |psi(x) - a' psi(b' x)| / psi(x) with a' = b'^alpha
// (Frechet) resp. b'^-alpha (Weibull). For a genuine max-semi-stable law
// the error at b' = law.b() is pure round-off; for a max-stable law it is
// round-off at every b' > 0. Grid points must lie in the support.
IdentityReport check_semi_stable_identity(const SemiStableLaw& law,
                                          std::span<const double> grid, double b_scale,
                                          double tolerance = kIdentityTolerance);
IdentityReport check_semi_stable_identity(const SemiStableLaw& law,
                                          std::span<const double> grid,
                                          double tolerance = kIdentityTolerance);

// Verdict of a max-semi-SD(c) membership scan: H(x) = F(x)/F(scale x) must
// be a non-degenerate distribution function. `scale` is the factor applied
// inside F (the branch-appropriate one: > 1 for Frechet, in (0,1) for
// Weibull); `c` reports the equivalent scale change > 1.
struct CofactorCheck {
  double scale = 0.0;
  double c = 0.0;
  bool non_decreasing = false;
  bool limits_ok = false;       // H -> 0 and -> 1 at the ends of the grid
  bool non_degenerate = false;  // at least two distinct interior values
  double worst_violation = 0.0; // largest monotonicity violation found
  bool verdict = false;
};

// Grid scan for an arbitrary distribution function. Points where F(scale x)
// underflows to 0 are skipped. The grid must be sorted ascending and should
// span the support deep enough into both tails for the limit checks to be
// meaningful (see extended_levels()).
CofactorCheck check_max_semi_sd(const std::function<double(double)>& cdf, double scale,
                                std::span<const double> grid);

// Same scan for a SemiStableLaw; the ratio is computed in log space via the
// tail function, so it never underflows.
CofactorCheck check_max_semi_sd(const SemiStableLaw& law, double scale,
                                std::span<const double> grid);

// Quantiles of the law at the given levels (ascending in u, hence sorted).
std::vector<double> quantile_grid(const SemiStableLaw& law, std::span<const double> levels);

// Levels 0.01, 0.02, ..., 0.99: the body grid used by the identity checks.
std::vector<double> standard_levels();

// Body grid extended by deep-tail levels on both sides, for limit checks.
std::vector<double> extended_levels();

}  // namespace maxsev
